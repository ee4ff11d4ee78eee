#pragma once

#include <Eigen/Dense>
#include <array>
#include <utility>
#include <vector>

namespace ktrack {

/// Planar unicycle pose. The heading is kept unwrapped (theta in R): the
/// global stability statements depend on the angle not being reduced mod 2*pi.
struct Pose {
  double x = 0;
  double y = 0;
  double theta = 0;
};

enum class SignalKind { Constant, InverseSqrt, Sinusoid };

/// Leader velocity pair (omega0(t), v0(t)) with its declared excitation data.
///
///   constant:      omega0 = omega_a,                          v0 = v_a
///   inverse_sqrt:  omega0 = omega_a - 1/sqrt(omega_b t + omega_c),
///                  v0     = v_a     + 1/sqrt(v_b t + v_c)
///   sinusoid:      omega0 = omega_a + omega_b sin(omega_nu t + omega_phase),
///                  v0     = v_a     + v_b sin(v_nu t + v_phase)
///
/// Negative times evaluate at t = 0 (backward extension), so that windowed
/// integrals looking back from small t are well defined.
struct LeaderSignal {
  SignalKind kind = SignalKind::Constant;
  double omega_a = 0, omega_b = 0, omega_c = 1, omega_nu = 0, omega_phase = 0;
  double v_a = 0, v_b = 0, v_c = 1, v_nu = 0, v_phase = 0;

  double omega_bar = 0;  // declared bound on |omega0| and |d omega0/dt|
  double pe_window = 1;  // T
  double pe_level = 0;   // mu, declared lower bound on window integrals of omega0^2

  double omega0(double t) const;
  double omega0_dot(double t) const;
  double v0(double t) const;

  /// Supremum of |omega0| over t >= 0, from the family's monotonicity.
  double analytic_omega_sup() const;
  /// Supremum of |d omega0/dt| over t >= 0.
  double analytic_omega_dot_sup() const;
};

/// Poses of the leader and its N followers at a common time.
struct FleetState {
  Pose leader;
  std::vector<Pose> followers;
  double time = 0;

  int follower_count() const { return static_cast<int>(followers.size()); }
};

/// Error coordinates: bar_theta_i = theta_i - theta_0 and the rotated-frame
/// differences bar_x_i = xt_i - xt_0, bar_y_i = yt_i - yt_0.
struct ErrorState {
  Eigen::VectorXd bar_theta;
  Eigen::VectorXd bar_x;
  Eigen::VectorXd bar_y;
  double tilde_x0 = 0;
  double tilde_y0 = 0;

  double norm() const;  // || (bar_x, bar_y, bar_theta) ||
};

/// Body-frame rotation: xt = cos(theta) x + sin(theta) y,
/// yt = -sin(theta) x + cos(theta) y. Norm preserving.
std::pair<double, double> rotate_to_body(const Pose& p);

/// Inverse of rotate_to_body for a given heading.
std::pair<double, double> rotate_to_world(double theta, double x_tilde, double y_tilde);

ErrorState error_state(const FleetState& fleet);

/// Shifts follower positions by the desired relative offsets, so that
/// tracking of the shifted fleet is formation keeping of the original.
FleetState apply_formation_offsets(const FleetState& fleet,
                                   const std::vector<std::pair<double, double>>& offsets);

/// Per-follower Cartesian error (x_i - x_0, y_i - y_0, theta_i - theta_0).
std::vector<std::array<double, 3>> cartesian_error(const FleetState& fleet);

/// Bound constant c with ||cartesian_error|| <= c ||error_state|| whenever
/// max{|x_0|, |y_0|} <= M, obtained from the rotation identity relating the
/// two error descriptions.
double lemma1_cartesian_bound(double M);

struct LeaderBound {
  double M = 0;                     // 1.05 * max over the grid of max{|x0|,|y0|}
  bool growing_at_horizon = false;  // running max still increasing near the end
};

/// Dense forward simulation of the leader alone, returning the inflated
/// position bound feeding the certificate constants.
LeaderBound leader_bound_estimate(const LeaderSignal& sig, const Pose& leader_init,
                                  double horizon);

}  // namespace ktrack
