#pragma once

#include <Eigen/Dense>

namespace ktrack {

/// Directed communication topology. Node 0 is the leader, followers are
/// numbered 1..N. adjacency(i, j) is the weight with which follower i+1
/// receives from follower j+1; leader_links(i) is the weight with which
/// follower i+1 receives from the leader.
struct DirectedNetwork {
  int follower_count = 0;
  Eigen::MatrixXd adjacency;    // N x N, zero diagonal, nonnegative
  Eigen::VectorXd leader_links; // N, nonnegative

  /// Throws std::invalid_argument when shapes, signs, the zero diagonal, or
  /// the rooted-spanning-tree requirement are violated.
  void validate() const;
};

/// True iff every follower is reachable from the leader along directed edges.
bool check_spanning_tree(const DirectedNetwork& net);

/// Coupling matrix H: h_ij = -a_ij for i != j, h_ii = sum_{j=0..N} a_ij.
/// Rejects networks without a leader-rooted spanning tree (H may be singular).
Eigen::MatrixXd build_coupling_matrix(const DirectedNetwork& net);

/// Diagonal stability certificate for the coupling matrix: a positive
/// diagonal D with Q = D H + H^T D symmetric positive definite, together
/// with the spectral quantities every downstream constant consumes.
struct CouplingCertificate {
  Eigen::MatrixXd H;
  Eigen::VectorXd D;  // positive diagonal entries
  Eigen::MatrixXd Q;  // D H + H^T D
  double lambda_min_Q = 0;
  double lambda_max_D = 0;
  double lambda_min_D = 0;
  double norm_H = 0;   // induced 2-norm
  double norm_DH = 0;  // induced 2-norm of D*H
};

/// Constructs the scaling D for a nonsingular M-matrix H via
/// z = H^{-1} 1, w = H^{-T} 1, d_i = w_i / z_i, then verifies Q > 0.
/// Falls back to a coordinate-descent rescaling of D when the verification
/// fails; throws std::invalid_argument (H not an M-matrix) or
/// std::runtime_error (Q still indefinite, lambda_min reported) otherwise.
CouplingCertificate find_diagonal_scaling(const Eigen::MatrixXd& H);

/// Assembles the certificate quantities for a caller-supplied diagonal.
/// Does not require Q > 0; lambda_min_Q reports whatever the pair yields.
CouplingCertificate coupling_from_diagonal(const Eigen::MatrixXd& H,
                                           const Eigen::VectorXd& D);

}  // namespace ktrack
