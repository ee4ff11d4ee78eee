#include "ktrack/network.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ktrack {

namespace {

constexpr double kMMatrixEigTol = 1e-10;  // eigenvalue real parts must exceed this
constexpr double kOffDiagTol = 1e-12;

double induced_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(0);
}

double min_eigenvalue_sym(const Eigen::MatrixXd& q) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void require_m_matrix(const Eigen::MatrixXd& h) {
  const auto n = h.rows();
  if (n == 0 || h.cols() != n)
    throw std::invalid_argument("find_diagonal_scaling: H must be square and nonempty");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j && h(i, j) > kOffDiagTol)
        throw std::invalid_argument(
            "find_diagonal_scaling: H is not an M-matrix (positive off-diagonal at " +
            std::to_string(i) + "," + std::to_string(j) + ")");
  Eigen::EigenSolver<Eigen::MatrixXd> es(h, false);
  const double min_re = es.eigenvalues().real().minCoeff();
  if (min_re <= kMMatrixEigTol)
    throw std::invalid_argument(
        "find_diagonal_scaling: H is not a nonsingular M-matrix (min eigenvalue real "
        "part " +
        std::to_string(min_re) + ")");
}

// Local search over multiplicative updates of D, keeping the best lambda_min(Q).
// Only reached when the primary construction fails verification.
Eigen::VectorXd rescale_coordinate_descent(const Eigen::MatrixXd& h,
                                           Eigen::VectorXd d) {
  const auto n = h.rows();
  auto lam = [&](const Eigen::VectorXd& cand) {
    return min_eigenvalue_sym(cand.asDiagonal() * h +
                              h.transpose() * cand.asDiagonal().toDenseMatrix());
  };
  double best = lam(d);
  double factor = 2.0;
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool improved = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (double mult : {factor, 1.0 / factor}) {
        Eigen::VectorXd cand = d;
        cand(i) *= mult;
        const double val = lam(cand);
        if (val > best) {
          best = val;
          d = cand;
          improved = true;
        }
      }
    }
    if (!improved) {
      factor = 1.0 + 0.5 * (factor - 1.0);
      if (factor < 1.0 + 1e-6) break;
    }
  }
  return d;
}

}  // namespace

void DirectedNetwork::validate() const {
  const int n = follower_count;
  if (n <= 0) throw std::invalid_argument("network: follower_count must be positive");
  if (adjacency.rows() != n || adjacency.cols() != n)
    throw std::invalid_argument("network: adjacency must be N x N");
  if (leader_links.size() != n)
    throw std::invalid_argument("network: leader_links must have length N");
  for (int i = 0; i < n; ++i) {
    if (adjacency(i, i) != 0.0)
      throw std::invalid_argument("network: adjacency diagonal must be exactly zero");
    if (leader_links(i) < 0.0)
      throw std::invalid_argument("network: leader link weights must be nonnegative");
    for (int j = 0; j < n; ++j)
      if (adjacency(i, j) < 0.0)
        throw std::invalid_argument("network: adjacency weights must be nonnegative");
  }
  if (!check_spanning_tree(*this))
    throw std::invalid_argument(
        "network: graph has no directed spanning tree rooted at the leader");
}

bool check_spanning_tree(const DirectedNetwork& net) {
  const int n = net.follower_count;
  if (n <= 0 || net.adjacency.rows() != n || net.leader_links.size() != n) return false;
  std::vector<char> reached(n, 0);
  std::vector<int> frontier;
  for (int i = 0; i < n; ++i) {
    if (net.leader_links(i) > 0.0) {
      reached[i] = 1;
      frontier.push_back(i);
    }
  }
  while (!frontier.empty()) {
    const int j = frontier.back();
    frontier.pop_back();
    for (int i = 0; i < n; ++i) {
      if (!reached[i] && net.adjacency(i, j) > 0.0) {
        reached[i] = 1;
        frontier.push_back(i);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (!reached[i]) return false;
  return true;
}

Eigen::MatrixXd build_coupling_matrix(const DirectedNetwork& net) {
  net.validate();
  const int n = net.follower_count;
  Eigen::MatrixXd h = -net.adjacency;
  for (int i = 0; i < n; ++i)
    h(i, i) = net.leader_links(i) + net.adjacency.row(i).sum();
  return h;
}

CouplingCertificate coupling_from_diagonal(const Eigen::MatrixXd& H,
                                           const Eigen::VectorXd& D) {
  CouplingCertificate cert;
  cert.H = H;
  cert.D = D;
  const Eigen::MatrixXd dh = D.asDiagonal() * H;
  cert.Q = dh + dh.transpose();
  cert.lambda_min_Q = min_eigenvalue_sym(cert.Q);
  cert.lambda_max_D = D.maxCoeff();
  cert.lambda_min_D = D.minCoeff();
  cert.norm_H = induced_norm(H);
  cert.norm_DH = induced_norm(dh);
  return cert;
}

CouplingCertificate find_diagonal_scaling(const Eigen::MatrixXd& H) {
  require_m_matrix(H);
  const auto n = H.rows();
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  const Eigen::VectorXd z = H.partialPivLu().solve(ones);
  const Eigen::VectorXd w = H.transpose().partialPivLu().solve(ones);
  if (z.minCoeff() <= 0.0 || w.minCoeff() <= 0.0)
    throw std::runtime_error(
        "find_diagonal_scaling: H^{-1} 1 or H^{-T} 1 not elementwise positive; H is "
        "not a nonsingular M-matrix");
  Eigen::VectorXd d = w.array() / z.array();
  CouplingCertificate cert = coupling_from_diagonal(H, d);
  if (cert.lambda_min_Q <= 0.0) {
    d = rescale_coordinate_descent(H, d);
    cert = coupling_from_diagonal(H, d);
    if (cert.lambda_min_Q <= 0.0) {
      std::ostringstream msg;
      msg << "find_diagonal_scaling: could not certify Q > 0, lambda_min(Q) = "
          << cert.lambda_min_Q;
      throw std::runtime_error(msg.str());
    }
  }
  return cert;
}

}  // namespace ktrack
