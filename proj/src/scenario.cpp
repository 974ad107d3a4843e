#include "pathassign/scenario.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace pathassign {
namespace {

using nlohmann::json;

ParseError error_at(std::size_t line, const std::string& field, const std::string& what) {
  return ParseError(line, field, what);
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, std::size_t line,
                    const std::string& context) {
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& item : obj.items()) {
    if (!keys.contains(item.key())) {
      const std::string field = context.empty() ? item.key() : context + "." + item.key();
      throw error_at(line, field, "unknown field");
    }
  }
}

const json& require(const json& obj, const char* key, std::size_t line, const std::string& context) {
  const std::string field = context.empty() ? key : context + "." + key;
  const auto it = obj.find(key);
  if (it == obj.end()) throw error_at(line, field, "missing field");
  return *it;
}

double number(const json& value, std::size_t line, const std::string& field) {
  if (!value.is_number()) throw error_at(line, field, "expected a number");
  const double d = value.get<double>();
  if (!std::isfinite(d)) throw error_at(line, field, "expected a finite number");
  return d;
}

double required_number(const json& obj, const char* key, std::size_t line, const std::string& context) {
  return number(require(obj, key, line, context), line, context.empty() ? key : context + "." + key);
}

double nonnegative(double value, std::size_t line, const std::string& field) {
  if (value < 0.0) throw error_at(line, field, "must be nonnegative");
  return value;
}

HostRecord parse_host(const json& j, std::size_t line) {
  if (!j.is_object()) throw error_at(line, "host", "expected an object");
  reject_unknown(j, {"v", "yaw_rate", "var_v", "var_yaw", "alpha"}, line, "host");
  HostRecord h;
  h.v = nonnegative(required_number(j, "v", line, "host"), line, "host.v");
  h.yaw_rate = required_number(j, "yaw_rate", line, "host");
  h.var_v = nonnegative(required_number(j, "var_v", line, "host"), line, "host.var_v");
  h.var_yaw = nonnegative(required_number(j, "var_yaw", line, "host"), line, "host.var_yaw");
  if (j.contains("alpha")) {
    h.alpha = number(j["alpha"], line, "host.alpha");
    if (!(std::abs(h.alpha) < std::numbers::pi / 2)) throw error_at(line, "host.alpha", "must lie in (-pi/2, pi/2)");
  }
  return h;
}

ObjectRecord parse_object(const json& j, std::size_t line, std::size_t index) {
  const std::string ctx = "objects[" + std::to_string(index) + "]";
  if (!j.is_object()) throw error_at(line, ctx, "expected an object");
  reject_unknown(j, {"id", "x", "y", "var_x", "var_y", "v_lat", "gt"}, line, ctx);
  ObjectRecord o;
  const json& id = require(j, "id", line, ctx);
  if (!id.is_number_integer()) throw error_at(line, ctx + ".id", "expected an integer");
  o.id = id.get<std::int64_t>();
  o.x = required_number(j, "x", line, ctx);
  o.y = required_number(j, "y", line, ctx);
  o.var_x = nonnegative(required_number(j, "var_x", line, ctx), line, ctx + ".var_x");
  o.var_y = nonnegative(required_number(j, "var_y", line, ctx), line, ctx + ".var_y");
  if (o.x <= 0.0) throw error_at(line, ctx + ".x", "objects must lie ahead of the host (x > 0)");
  if (j.contains("v_lat")) o.lateral_velocity = number(j["v_lat"], line, ctx + ".v_lat");
  const json& gt = require(j, "gt", line, ctx);
  if (!gt.is_number_integer() || gt.get<std::int64_t>() < 0 || gt.get<std::int64_t>() > 4) {
    throw error_at(line, ctx + ".gt", "expected an integer path index in 0..4");
  }
  o.ground_truth = PathIndex(gt.get<int>());
  return o;
}

std::array<GaussianScalar, 4> parse_bounds(const json& j, std::size_t line) {
  if (!j.is_array() || j.size() != 4) throw error_at(line, "bounds", "expected 4 boundaries");
  std::array<GaussianScalar, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string ctx = "bounds[" + std::to_string(i) + "]";
    if (!j[i].is_object()) throw error_at(line, ctx, "expected an object");
    reject_unknown(j[i], {"mu", "sigma"}, line, ctx);
    out[i].mean = required_number(j[i], "mu", line, ctx);
    out[i].std = nonnegative(required_number(j[i], "sigma", line, ctx), line, ctx + ".sigma");
    if (i > 0 && !(out[i - 1].mean < out[i].mean)) {
      throw error_at(line, ctx + ".mu", "boundary means must be strictly increasing");
    }
  }
  return out;
}

ScenarioFrame parse_frame(const std::string& text, std::size_t line) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw error_at(line, "", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw error_at(line, "", "expected a JSON object");
  reject_unknown(j, {"t", "host", "objects", "bounds"}, line, "");

  ScenarioFrame f;
  f.timestamp = required_number(j, "t", line, "");
  f.host = parse_host(require(j, "host", line, ""), line);
  const json& objects = require(j, "objects", line, "");
  if (!objects.is_array()) throw error_at(line, "objects", "expected an array");
  for (std::size_t i = 0; i < objects.size(); ++i) f.objects.push_back(parse_object(objects[i], line, i));
  if (j.contains("bounds")) f.bounds = parse_bounds(j["bounds"], line);
  return f;
}

json to_json(const ScenarioFrame& f) {
  json host = {{"v", f.host.v}, {"yaw_rate", f.host.yaw_rate}, {"var_v", f.host.var_v},
               {"var_yaw", f.host.var_yaw}};
  if (f.host.alpha != 0.0) host["alpha"] = f.host.alpha;
  json objects = json::array();
  for (const auto& o : f.objects) {
    json jo = {{"id", o.id}, {"x", o.x}, {"y", o.y}, {"var_x", o.var_x}, {"var_y", o.var_y},
               {"gt", o.ground_truth.value()}};
    if (o.lateral_velocity) jo["v_lat"] = *o.lateral_velocity;
    objects.push_back(std::move(jo));
  }
  json j = {{"t", f.timestamp}, {"host", std::move(host)}, {"objects", std::move(objects)}};
  if (f.bounds) {
    json b = json::array();
    for (const auto& g : *f.bounds) b.push_back({{"mu", g.mean}, {"sigma", g.std}});
    j["bounds"] = std::move(b);
  }
  return j;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::string field, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + (field.empty() ? "" : ", field '" + field + "'") +
                         ": " + what),
      line_(line),
      field_(std::move(field)) {}

Scenario parse_scenario(std::istream& in) {
  Scenario frames;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    ScenarioFrame frame = parse_frame(text, line);
    if (!frames.empty() && !(frame.timestamp > frames.back().timestamp)) {
      throw ValidationError("line " + std::to_string(line) + ": timestamps must be strictly increasing");
    }
    frames.push_back(std::move(frame));
  }
  return frames;
}

Scenario parse_scenario_string(const std::string& text) {
  std::istringstream in(text);
  return parse_scenario(in);
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path);
  return parse_scenario(in);
}

void write_scenario(std::ostream& os, const Scenario& frames) {
  for (const auto& f : frames) os << to_json(f).dump() << '\n';
}

void save_scenario_file(const std::string& path, const Scenario& frames) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write scenario file: " + path);
  write_scenario(out, frames);
}

}  // namespace pathassign
