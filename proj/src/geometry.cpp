#include "pathassign/geometry.hpp"

#include <cmath>

namespace pathassign {
namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) throw InputError(std::string("non-finite ") + name);
}

struct OffsetTerms {
  double a;          // straight-path offset y cos(alpha) - x sin(alpha)
  double rho2;       // x^2 + y^2
  double curvature;  // yaw_rate / v
  double root;       // sqrt(1 - 2 a k + rho^2 k^2) = distance to center / |r|
};

OffsetTerms offset_terms(const HostState& host, double x, double y) {
  require_finite(host.v, "v");
  require_finite(host.yaw_rate, "yaw_rate");
  require_finite(host.alpha, "alpha");
  require_finite(x, "x");
  require_finite(y, "y");
  if (host.v < 0.0) throw InputError("negative host speed");
  if (host.v == 0.0 && host.yaw_rate != 0.0) {
    throw InputError("zero host speed with nonzero yaw rate has no path radius");
  }
  OffsetTerms t{};
  t.a = y * std::cos(host.alpha) - x * std::sin(host.alpha);
  t.rho2 = x * x + y * y;
  t.curvature = host.v == 0.0 ? 0.0 : host.yaw_rate / host.v;
  const double k = t.curvature;
  t.root = std::sqrt(std::max(0.0, 1.0 - 2.0 * t.a * k + t.rho2 * k * k));
  return t;
}

}  // namespace

InputVector InputVector::diagonal(double v, double yaw_rate, double x, double y, double var_v,
                                  double var_yaw, double var_x, double var_y) {
  InputVector in;
  in.mean << v, yaw_rate, x, y;
  in.covariance.diagonal() << var_v, var_yaw, var_x, var_y;
  return in;
}

void InputVector::validate() const {
  if (!mean.allFinite() || !covariance.allFinite()) throw InputError("InputVector: non-finite entry");
  if (((covariance - covariance.transpose()).cwiseAbs().array() > 1e-12).any()) {
    throw InputError("InputVector: covariance is not symmetric");
  }
  if ((covariance.diagonal().array() < 0.0).any()) {
    throw InputError("InputVector: negative variance on the diagonal");
  }
}

double lateral_path_offset(const HostState& host, double x, double y) {
  const OffsetTerms t = offset_terms(host, x, y);
  return (2.0 * t.a - t.rho2 * t.curvature) / (1.0 + t.root);
}

Eigen::Vector4d jacobian_lateral_offset(const HostState& host, double x, double y) {
  const OffsetTerms t = offset_terms(host, x, y);
  if (host.v == 0.0) throw SingularityError("offset is not differentiable in v at zero speed");
  if (t.root == 0.0) throw SingularityError("object at the center of the path circle");

  const double k = t.curvature;
  const double num = 2.0 * t.a - t.rho2 * k;
  const double den = 1.0 + t.root;
  const double den2 = den * den;

  // Partials of num/den with respect to the intermediate terms.
  const double d_a = (2.0 * den + num * k / t.root) / den2;
  const double d_rho2 = (-k * den - num * (k * k / (2.0 * t.root))) / den2;
  const double d_k = (-t.rho2 * den - num * ((t.rho2 * k - t.a) / t.root)) / den2;

  const double s = std::sin(host.alpha);
  const double c = std::cos(host.alpha);
  Eigen::Vector4d j;
  j(0) = d_k * (-host.yaw_rate / (host.v * host.v));
  j(1) = d_k / host.v;
  j(2) = d_a * (-s) + d_rho2 * 2.0 * x;
  j(3) = d_a * c + d_rho2 * 2.0 * y;
  return j;
}

PathTransformResult transform_to_path(const InputVector& input, double alpha) {
  input.validate();
  const HostState host{input.mean(0), input.mean(1), alpha, 0.0};
  const double x = input.mean(2);
  const double y = input.mean(3);

  PathTransformResult out;
  out.offset.mean = lateral_path_offset(host, x, y);
  if (input.covariance.isZero(0.0)) return out;

  const Eigen::Vector4d j = jacobian_lateral_offset(host, x, y);
  double var = j.dot(input.covariance * j);
  if (var < 0.0) {
    var = 0.0;
    out.variance_clamped = true;
  }
  out.offset.std = std::sqrt(var);
  return out;
}

}  // namespace pathassign
