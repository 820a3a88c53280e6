#pragma once

// Brute-force reference: the interaction Hamiltonian as a dense matrix on
// the truncated atom (x) Fock (x) Fock product space, evolved by dense
// Hermitian eigendecomposition. Shares nothing with the block path except
// SystemParams, so agreement between the two is a real check.

#include <span>

#include <Eigen/Dense>

#include "lambdaphase/dynamics.hpp"

namespace lambdaphase {

inline constexpr Eigen::Index kMaxOracleDimension = 20000;

/// Dense operator on the basis (level, n_a, n_b) in lexicographic order with
/// 0 <= n_a <= cutoff_a, 0 <= n_b <= cutoff_b.
class FullSpaceOperator {
 public:
  FullSpaceOperator(int cutoff_a, int cutoff_b, Eigen::MatrixXcd matrix);

  int cutoff_a() const { return cutoff_a_; }
  int cutoff_b() const { return cutoff_b_; }
  Eigen::Index dimension() const { return matrix_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  Eigen::Index index_of(int level, int photons_a, int photons_b) const;

 private:
  int cutoff_a_;
  int cutoff_b_;
  Eigen::MatrixXcd matrix_;
};

/// Throws std::invalid_argument for cutoffs < 1 or dimension > kMaxOracleDimension.
FullSpaceOperator build_full_hamiltonian(const SystemParams& params, int cutoff_a, int cutoff_b);

/// N_a and N_b as diagonal matrices on the same basis.
FullSpaceOperator excitation_operator_a(int cutoff_a, int cutoff_b);
FullSpaceOperator excitation_operator_b(int cutoff_a, int cutoff_b);

/// Eigendecomposes once; evolves any number of vectors and times.
class FullEvolver {
 public:
  /// Throws std::domain_error if the operator is not Hermitian to 1e-14 (relative).
  explicit FullEvolver(const FullSpaceOperator& h);
  Eigen::VectorXcd evolve(const Eigen::VectorXcd& psi0, double t) const;

 private:
  Eigen::MatrixXcd vectors_;
  Eigen::VectorXd values_;
};

/// exp(-iHt) psi0. Requires ||psi0|| = 1 (1e-10).
Eigen::VectorXcd full_evolve(const FullSpaceOperator& h, const Eigen::VectorXcd& psi0, double t);

/// True when every existing member of subspace (N_a, N_b) fits under the
/// cutoffs, so the truncated space evolves it exactly.
bool subspace_fits(int excitations_a, int excitations_b, int cutoff_a, int cutoff_b);

/// Product state c (x) |alpha_a> (x) |alpha_b> on the truncated space, with
/// components outside fitting subspaces removed, normalized to 1. Coherent
/// amplitudes come from the recurrence Q_n = Q_{n-1} sqrt(nbar/n).
Eigen::VectorXcd full_initial_state(const SystemParams& params, int cutoff_a, int cutoff_b);

/// Drops subspaces that do not fit and renormalizes.
SystemState restrict_to_fitting_subspaces(const SystemState& state, int cutoff_a, int cutoff_b);

/// Places block amplitudes into the full basis. Members outside the cutoffs
/// must carry zero amplitude (throws std::invalid_argument otherwise).
Eigen::VectorXcd embed(const SystemState& state, int cutoff_a, int cutoff_b);

struct OracleComparison {
  double initial_difference = 0.0;  // max |block - full| at t = 0
  double max_difference = 0.0;      // max over all times
  double max_norm_drift = 0.0;      // max | ||psi_full(t)|| - 1 |
  double max_excitation_drift = 0.0;  // max change of <N_a>, <N_b>
};

/// Evolves the same initial data along the block path and the full path.
OracleComparison compare_with_oracle(const SystemParams& params, int cutoff_a, int cutoff_b,
                                     std::span<const double> times);

}  // namespace lambdaphase
