#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "ktrack/kinematics.hpp"
#include "ktrack/network.hpp"

namespace ktrack {

struct ControllerGains {
  double k_omega = 0;  // 1/s
  double k_v = 0;      // 1/s
};

/// Global sampling grid t_k = origin + k * period.
struct SamplingSchedule {
  double period = 0;
  double origin = 0;

  double instant(long k) const { return origin + static_cast<double>(k) * period; }
  long index_at(double t) const;
};

struct Control {
  double omega = 0;
  double v = 0;
};

/// Zero-order-held virtual errors, refreshed at each sampling instant.
/// The raw error snapshots are kept so the inter-sample deviation monitors
/// theta_hat(t) = bar_theta(t_k) - bar_theta(t) (and its x counterpart) can be
/// evaluated from a trajectory log without re-simulation.
struct HeldErrors {
  Eigen::VectorXd e_theta;
  Eigen::VectorXd e_xtilde;
  Eigen::VectorXd bar_theta;
  Eigen::VectorXd bar_x;
  double sampled_at = 0;
};

/// Neighbor-weighted disagreement sums
///   e_theta_i = sum_j a_ij (theta_i - theta_j),
///   e_xtilde_i = sum_j a_ij (xt_i - xt_j),  j running over 0..N.
/// Equivalently H * bar_theta and H * bar_x in error coordinates.
std::pair<Eigen::VectorXd, Eigen::VectorXd> virtual_errors(const FleetState& fleet,
                                                           const DirectedNetwork& net);

/// omega_i = -k_omega e_theta_i + omega0, v_i = -k_v e_xtilde_i + v0.
std::vector<Control> continuous_law(const Eigen::VectorXd& e_theta,
                                    const Eigen::VectorXd& e_xtilde, double omega0,
                                    double v0, const ControllerGains& gains);

/// Held feedback with exact feedforward: omega_i(t) = -k_omega e_theta_i(t_k)
/// + omega0(t), v_i(t) = -k_v e_xtilde_i(t_k) + v0(t). The hold must cover
/// now (stale holds are a contract violation and throw std::logic_error).
std::vector<Control> sampled_law(const HeldErrors& held, const SamplingSchedule& sched,
                                 double now, double omega0_now, double v0_now,
                                 const ControllerGains& gains);

}  // namespace ktrack
