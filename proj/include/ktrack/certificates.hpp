#pragma once

#include <optional>
#include <vector>

#include "ktrack/controllers.hpp"
#include "ktrack/kinematics.hpp"
#include "ktrack/network.hpp"

namespace ktrack {

/// Every derived constant of the stability certificates for one scenario.
/// Fields that require a sampling period are NaN for continuous runs; varrho
/// and chi are additionally NaN when the configured period exceeds the
/// respective admissible bound.
struct CertificateSet {
  // excitation, leader bound, and gain context the formulas consume
  double T = 0;          // PE window
  double mu = 0;         // PE level
  double omega_bar = 0;  // leader velocity bound
  double M = 0;          // leader position bound
  double k_omega = 0;
  double k_v = 0;

  double epsilon = 0;  // slack used inside the gamma bound
  double gamma = 0;

  double C1 = 0, C2 = 0;       // iISS supply coefficients
  double C0 = 0, C0_bar = 0;   // changing-supply coefficients
  double sigma = 0;            // weight joining the two Lyapunov functions
  double C3 = 0;               // exponential envelope rate (r0-independent)
  double C4 = 0, C5 = 0;       // sampled-analysis coefficients
  double h1 = 0, h2 = 0;       // contraction coefficients of the angle block
  double L1 = 0, L2 = 0, L3 = 0;
  double T1_star = 0, T2_star = 0, T_star = 0;

  double T0 = 0;  // configured sampling period, 0 for continuous runs
  double L4 = 0;  // needs T0
  double C6 = 0, varrho = 0, chi = 0;
};

struct LyapunovEvaluation {
  double V0 = 0;
  double V1 = 0;
  double phi = 0;
  double W1 = 0;
  double W2 = 0;
  double W3 = 0;
  double Omega = 0;
  double W4 = 0;
};

/// K-exponential envelope data at a given initial error norm r0. When delta2
/// (or anything downstream of it) overflows, the envelope makes no claim at
/// this r0 and is flagged vacuous instead of erroring.
struct Envelope {
  double r0 = 0;
  double delta1 = 0;
  double delta2 = 0;
  double delta = 0;
  double delta_bar = 0;
  double Delta0 = 0;
  double C3 = 0;
  double M0 = 0;
  bool vacuous = false;
};

/// phi(t) = 1 + (2/T) int_{t-T}^{t} int_{s}^{t} omega0^2(tau) dtau ds,
/// by nested adaptive quadrature to absolute error 1e-8. Always in
/// [1, 1 + T*omega_bar].
double phi_value(double t, const LeaderSignal& sig);

/// Uniform-grid cache of phi with local cubic interpolation, validated at
/// construction against direct quadrature (max error <= 1e-7 required).
class PhiCache {
 public:
  PhiCache(const LeaderSignal& sig, double t_begin, double t_end, double step = 0.02);
  double operator()(double t) const;
  double validation_error() const { return validation_error_; }

 private:
  double t0_ = 0;
  double step_ = 0;
  std::vector<double> values_;
  double validation_error_ = 0;
};

struct GammaResult {
  double epsilon = 0;
  double gamma = 0;
};

/// gamma at its lower bound: max over the bracketed expression minus one and
/// omega_bar, with epsilon = (T/mu)(omega_bar + k_v omega_bar lambda_max(D)).
GammaResult gamma_constant(const CouplingCertificate& coupling, const LeaderSignal& sig,
                           const ControllerGains& gains);

/// C1 = 2 k_omega omega_bar ||H||,
/// C2 = 2 sqrt(2) k_omega M (1 + gamma + T omega_bar + omega_bar)
///      sqrt(lambda_max(D)) ||H||.
std::pair<double, double> claim1_coefficients(const CouplingCertificate& coupling,
                                              const LeaderSignal& sig,
                                              const ControllerGains& gains, double M,
                                              double gamma);

/// C0 = sup_{u >= 0} (C1 u^2 + C2 u) / (1 + u^2) via a log-spaced grid plus
/// golden-section refinement, with the asymptote C1 as a candidate;
/// C0_bar = mu / (T (1 + T omega_bar + 2 gamma)).
std::pair<double, double> supply_coefficients(double C1, double C2, double gamma,
                                              const LeaderSignal& sig);

/// sigma at its lower bound 2 C0^2 / (lambda_min(Q) k_omega C0_bar).
double omega_weight_sigma(double C0, double C0_bar, const CouplingCertificate& coupling,
                          const ControllerGains& gains);

/// Smallest windowed excitation integral min_t int_t^{t+T} omega0^2 over a
/// dense grid of window starts in [0, horizon], refined locally.
double pe_level_estimate(const LeaderSignal& sig, double horizon);

/// Assembles the full constant set. T0 = 0 requests the continuous-law set;
/// otherwise the sampled extras (L4, C6, varrho, chi) are filled where the
/// respective admissibility bound allows.
CertificateSet make_certificates(const CouplingCertificate& coupling,
                                 const LeaderSignal& sig, const ControllerGains& gains,
                                 double M, double T0);

/// Envelope constants at initial error norm r0 (class-K in r0).
Envelope exponential_envelope(double r0, const CouplingCertificate& coupling,
                              const CertificateSet& c);

struct Contractions {
  std::optional<double> varrho;  // defined when T0 < T1*
  double C6 = 0;
  std::optional<double> chi;  // defined when T0 < T2*
};

/// Per-sample contraction factors of V0 and W1. Rejects nonpositive T0 and
/// T0 beyond both admissible bounds.
Contractions per_sample_contractions(double T0, const CertificateSet& c);

/// V0 = 0.5 bar_theta' D bar_theta, V1 = 0.5 (bar_x' D bar_x + bar_y' D bar_y),
/// W1 = (phi + gamma) V1 - omega0(t) bar_x' D bar_y, W2 = ln(1 + W1),
/// W3 = W2 - 1 + exp(-W2), Omega = W3 + sigma V0, W4 = W1 + Delta0 V0.
/// A non-finite Delta0 (vacuous envelope) makes W4 NaN.
LyapunovEvaluation evaluate_lyapunov(double t, const ErrorState& err,
                                     const Eigen::VectorXd& D, const LeaderSignal& sig,
                                     const CertificateSet& c, double Delta0,
                                     double phi_at_t);

/// Step-3 constants of the sampled analysis; beta is the observed number of
/// whole sampling periods before the angle errors enter the small-input
/// region, so L5 and L6 are a-posteriori quantities of a given run.
struct Step3Constants {
  double beta = 0;
  double L4 = 0;
  double L5 = 0;
  double L6 = 0;
};
Step3Constants step3_constants(const CouplingCertificate& coupling,
                               const CertificateSet& c, double beta);

}  // namespace ktrack
