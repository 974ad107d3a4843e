#pragma once

#include <Eigen/Core>

#include "pathassign/types.hpp"

namespace pathassign {

/// Raw inertial host signals. alpha is the constant heading offset between
/// the vehicle axis and the path tangent at the reference point.
struct HostState {
  double v = 0.0;         // m/s, >= 0
  double yaw_rate = 0.0;  // rad/s
  double alpha = 0.0;     // rad, in (-pi/2, pi/2)
  double timestamp = 0.0;
};

/// Object position in the host frame (x forward, y left).
struct ObjectMeasurement {
  double x = 0.0;
  double y = 0.0;
  double timestamp = 0.0;
  double lateral_velocity_input = 0.0;  // m/s, path frame
  bool has_lateral_velocity = false;
};

/// Mean and covariance of (v, yaw_rate, x, y).
struct InputVector {
  Eigen::Vector4d mean = Eigen::Vector4d::Zero();
  Eigen::Matrix4d covariance = Eigen::Matrix4d::Zero();

  static InputVector diagonal(double v, double yaw_rate, double x, double y, double var_v,
                              double var_yaw, double var_x, double var_y);

  /// Throws InputError on asymmetric covariance (> 1e-12) or a negative diagonal.
  void validate() const;
};

/// Signed lateral offset of (x, y) from the circular host path of radius
/// v / yaw_rate, positive to the left of the path. The straight path
/// (yaw_rate = 0) evaluates to y cos(alpha) - x sin(alpha).
///
/// Evaluated through curvature k = yaw_rate / v as
///   (2a - rho^2 k) / (1 + sqrt(1 - 2ak + rho^2 k^2)),  a = y cos - x sin, rho^2 = x^2 + y^2,
/// which equals r - sgn(r) sqrt((x + r sin)^2 + (y - r cos)^2) for every k != 0 and
/// has no cancellation as k -> 0.
double lateral_path_offset(const HostState& host, double x, double y);

/// d(lateral_path_offset)/d(v, yaw_rate, x, y). Throws SingularityError at the
/// circle center, and for v == 0 on a curved path.
Eigen::Vector4d jacobian_lateral_offset(const HostState& host, double x, double y);

struct PathTransformResult {
  GaussianScalar offset;
  bool variance_clamped = false;  // J V J^T came out negative and was set to 0
};

/// First-order propagation of the input Gaussian through lateral_path_offset.
PathTransformResult transform_to_path(const InputVector& input, double alpha);

}  // namespace pathassign
