#include "ktrack/controllers.hpp"

#include <cmath>
#include <stdexcept>

namespace ktrack {

long SamplingSchedule::index_at(double t) const {
  return static_cast<long>(std::floor((t - origin) / period + 1e-9));
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> virtual_errors(const FleetState& fleet,
                                                           const DirectedNetwork& net) {
  const int n = net.follower_count;
  if (fleet.follower_count() != n)
    throw std::invalid_argument("virtual_errors: fleet size does not match network");
  Eigen::VectorXd xt(n), theta(n);
  for (int i = 0; i < n; ++i) {
    xt(i) = rotate_to_body(fleet.followers[i]).first;
    theta(i) = fleet.followers[i].theta;
  }
  const double xt0 = rotate_to_body(fleet.leader).first;
  const double theta0 = fleet.leader.theta;

  Eigen::VectorXd e_theta(n), e_xtilde(n);
  for (int i = 0; i < n; ++i) {
    double et = net.leader_links(i) * (theta(i) - theta0);
    double ex = net.leader_links(i) * (xt(i) - xt0);
    for (int j = 0; j < n; ++j) {
      et += net.adjacency(i, j) * (theta(i) - theta(j));
      ex += net.adjacency(i, j) * (xt(i) - xt(j));
    }
    e_theta(i) = et;
    e_xtilde(i) = ex;
  }
  return {e_theta, e_xtilde};
}

std::vector<Control> continuous_law(const Eigen::VectorXd& e_theta,
                                    const Eigen::VectorXd& e_xtilde, double omega0,
                                    double v0, const ControllerGains& gains) {
  std::vector<Control> out(e_theta.size());
  for (Eigen::Index i = 0; i < e_theta.size(); ++i) {
    out[i].omega = -gains.k_omega * e_theta(i) + omega0;
    out[i].v = -gains.k_v * e_xtilde(i) + v0;
  }
  return out;
}

std::vector<Control> sampled_law(const HeldErrors& held, const SamplingSchedule& sched,
                                 double now, double omega0_now, double v0_now,
                                 const ControllerGains& gains) {
  // The right interval end is admitted: an integrator stage at t_{k+1} still
  // belongs to the step taken from the k-th hold.
  const double slack = 1e-9 * (1.0 + sched.period);
  if (now < held.sampled_at - slack || now > held.sampled_at + sched.period + slack)
    throw std::logic_error("sampled_law: stale hold (now outside the hold interval)");
  return continuous_law(held.e_theta, held.e_xtilde, omega0_now, v0_now, gains);
}

}  // namespace ktrack
