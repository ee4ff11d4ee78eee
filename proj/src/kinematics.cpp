#include "ktrack/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ktrack {

double LeaderSignal::omega0(double t) const {
  const double te = std::max(t, 0.0);
  switch (kind) {
    case SignalKind::Constant:
      return omega_a;
    case SignalKind::InverseSqrt:
      return omega_a - 1.0 / std::sqrt(omega_b * te + omega_c);
    case SignalKind::Sinusoid:
      return omega_a + omega_b * std::sin(omega_nu * te + omega_phase);
  }
  return 0.0;
}

double LeaderSignal::omega0_dot(double t) const {
  const double te = std::max(t, 0.0);
  switch (kind) {
    case SignalKind::Constant:
      return 0.0;
    case SignalKind::InverseSqrt:
      return 0.5 * omega_b * std::pow(omega_b * te + omega_c, -1.5);
    case SignalKind::Sinusoid:
      return omega_b * omega_nu * std::cos(omega_nu * te + omega_phase);
  }
  return 0.0;
}

double LeaderSignal::v0(double t) const {
  const double te = std::max(t, 0.0);
  switch (kind) {
    case SignalKind::Constant:
      return v_a;
    case SignalKind::InverseSqrt:
      return v_a + 1.0 / std::sqrt(v_b * te + v_c);
    case SignalKind::Sinusoid:
      return v_a + v_b * std::sin(v_nu * te + v_phase);
  }
  return 0.0;
}

double LeaderSignal::analytic_omega_sup() const {
  switch (kind) {
    case SignalKind::Constant:
      return std::abs(omega_a);
    case SignalKind::InverseSqrt:
      // monotone in t: extremes at t = 0 and t -> infinity
      return std::max(std::abs(omega_a - 1.0 / std::sqrt(omega_c)), std::abs(omega_a));
    case SignalKind::Sinusoid:
      return std::abs(omega_a) + std::abs(omega_b);
  }
  return 0.0;
}

double LeaderSignal::analytic_omega_dot_sup() const {
  switch (kind) {
    case SignalKind::Constant:
      return 0.0;
    case SignalKind::InverseSqrt:
      // |d omega0/dt| decreases in t; maximal at t = 0
      return 0.5 * omega_b * std::pow(omega_c, -1.5);
    case SignalKind::Sinusoid:
      return std::abs(omega_b * omega_nu);
  }
  return 0.0;
}

double ErrorState::norm() const {
  return std::sqrt(bar_x.squaredNorm() + bar_y.squaredNorm() + bar_theta.squaredNorm());
}

std::pair<double, double> rotate_to_body(const Pose& p) {
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  return {c * p.x + s * p.y, -s * p.x + c * p.y};
}

std::pair<double, double> rotate_to_world(double theta, double x_tilde, double y_tilde) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * x_tilde - s * y_tilde, s * x_tilde + c * y_tilde};
}

ErrorState error_state(const FleetState& fleet) {
  const int n = fleet.follower_count();
  ErrorState err;
  err.bar_theta.resize(n);
  err.bar_x.resize(n);
  err.bar_y.resize(n);
  const auto [xt0, yt0] = rotate_to_body(fleet.leader);
  err.tilde_x0 = xt0;
  err.tilde_y0 = yt0;
  for (int i = 0; i < n; ++i) {
    const auto [xti, yti] = rotate_to_body(fleet.followers[i]);
    err.bar_theta(i) = fleet.followers[i].theta - fleet.leader.theta;
    err.bar_x(i) = xti - xt0;
    err.bar_y(i) = yti - yt0;
  }
  return err;
}

FleetState apply_formation_offsets(
    const FleetState& fleet, const std::vector<std::pair<double, double>>& offsets) {
  if (offsets.size() != fleet.followers.size())
    throw std::invalid_argument("apply_formation_offsets: offsets length mismatch");
  FleetState shifted = fleet;
  for (size_t i = 0; i < offsets.size(); ++i) {
    shifted.followers[i].x -= offsets[i].first;
    shifted.followers[i].y -= offsets[i].second;
  }
  return shifted;
}

std::vector<std::array<double, 3>> cartesian_error(const FleetState& fleet) {
  std::vector<std::array<double, 3>> out(fleet.followers.size());
  for (size_t i = 0; i < fleet.followers.size(); ++i) {
    out[i] = {fleet.followers[i].x - fleet.leader.x,
              fleet.followers[i].y - fleet.leader.y,
              fleet.followers[i].theta - fleet.leader.theta};
  }
  return out;
}

double lemma1_cartesian_bound(double M) {
  // Per follower: |dtheta_i| = |bar_theta_i| and
  //   ||(dx_i, dy_i)|| <= ||(bar_x_i, bar_y_i)|| + sqrt(2) M |bar_theta_i|,
  // using that the residual rotation block has norm 2|sin(bar_theta/2)| <= |bar_theta|
  // and ||(x0, y0)|| <= sqrt(2) M. Squaring with (a+b)^2 <= 2a^2 + 2b^2 and
  // stacking over followers gives the constant below.
  return std::sqrt(std::max(2.0, 4.0 * M * M + 1.0));
}

LeaderBound leader_bound_estimate(const LeaderSignal& sig, const Pose& leader_init,
                                  double horizon) {
  if (horizon <= 0.0)
    throw std::invalid_argument("leader_bound_estimate: horizon must be positive");
  const double h = std::min(0.005, horizon / 64.0);
  const long steps = static_cast<long>(std::ceil(horizon / h));
  Pose p = leader_init;
  double peak = std::max(std::abs(p.x), std::abs(p.y));
  double peak_at = 0.0;
  auto deriv = [&sig](const Pose& q, double t, double out[3]) {
    const double v = sig.v0(t);
    out[0] = v * std::cos(q.theta);
    out[1] = v * std::sin(q.theta);
    out[2] = sig.omega0(t);
  };
  for (long k = 0; k < steps; ++k) {
    const double t = k * h;
    double k1[3], k2[3], k3[3], k4[3];
    deriv(p, t, k1);
    Pose q{p.x + 0.5 * h * k1[0], p.y + 0.5 * h * k1[1], p.theta + 0.5 * h * k1[2]};
    deriv(q, t + 0.5 * h, k2);
    q = {p.x + 0.5 * h * k2[0], p.y + 0.5 * h * k2[1], p.theta + 0.5 * h * k2[2]};
    deriv(q, t + 0.5 * h, k3);
    q = {p.x + h * k3[0], p.y + h * k3[1], p.theta + h * k3[2]};
    deriv(q, t + h, k4);
    p.x += h / 6.0 * (k1[0] + 2.0 * (k2[0] + k3[0]) + k4[0]);
    p.y += h / 6.0 * (k1[1] + 2.0 * (k2[1] + k3[1]) + k4[1]);
    p.theta += h / 6.0 * (k1[2] + 2.0 * (k2[2] + k3[2]) + k4[2]);
    const double mag = std::max(std::abs(p.x), std::abs(p.y));
    if (mag > peak) {
      peak = mag;
      peak_at = (k + 1) * h;
    }
  }
  LeaderBound out;
  out.M = 1.05 * peak;
  out.growing_at_horizon = peak_at > 0.9 * horizon;
  return out;
}

}  // namespace ktrack
