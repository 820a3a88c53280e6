#pragma once

// Deformed su(3) generators on a truncated Fock (x) Fock (x) atom space. Used
// only to check the operator identities behind the relative-phase
// construction; the dynamics never builds these matrices.

#include <Eigen/Dense>

#include "lambdaphase/algebra.hpp"

namespace lambdaphase {

/// Basis ordering: lexicographic in (level, n_a, n_b), photons 0..cutoff.
class DeformedGenerators {
 public:
  /// Throws std::invalid_argument for cutoff < 2.
  explicit DeformedGenerators(int cutoff);

  int cutoff() const { return cutoff_; }
  Eigen::Index dimension() const { return dim_; }
  Eigen::Index index_of(int level, int photons_a, int photons_b) const;

  /// Atomic operator S^{ij} (x) 1.
  Eigen::MatrixXcd atomic(int i, int j) const;

  Eigen::MatrixXcd a;  // mode a annihilation
  Eigen::MatrixXcd b;  // mode b annihilation
  Eigen::MatrixXcd x13_plus;   // a S_+^{13}
  Eigen::MatrixXcd x13_minus;  // a^H S_-^{13}
  Eigen::MatrixXcd x23_plus;   // b S_+^{23}
  Eigen::MatrixXcd x23_minus;  // b^H S_-^{23}
  Eigen::MatrixXcd y12_plus;   // a b^H S_+^{12}
  Eigen::MatrixXcd y12_minus;
  Eigen::MatrixXcd excitations_a;  // N_a = a^H a - S^{11} + 1
  Eigen::MatrixXcd excitations_b;  // N_b = b^H b - S^{22} + 1
  Eigen::MatrixXcd identity;

  /// E^{13}_Phi assembled from its block form on every subspace that lies
  /// entirely inside the truncated space.
  Eigen::MatrixXcd relative_phase_exponential_13() const;

  /// Largest |entry| of m over columns whose photon numbers are both below
  /// the cutoff (the truncation edge is excluded).
  double interior_residual(const Eigen::MatrixXcd& m) const;

 private:
  int cutoff_;
  Eigen::Index dim_;
};

struct DeformedAlgebraReport {
  double bracket13 = 0.0;       // [X+13, X-13] = N_a (1 - 2S11 - S22)
  double bracket23 = 0.0;       // [X+23, X-23] = N_b (1 - 2S22 - S11)
  double bracket12 = 0.0;       // [Y+12, Y-12] = N_a N_b (S22 - S11)
  double cross_bracket = 0.0;   // [X+13, X-23] = -Y+12
  double commuting_plus = 0.0;  // [X+13, X+23] = 0
  double vacuum = 0.0;          // X-13 |1; N_a, N_b - 1> = 0
  double phase_commutes = 0.0;  // [E13_Phi, N_a] = [E13_Phi, N_b] = 0
  double phase_unitary = 0.0;   // E E^H = 1 on complete subspaces

  double max() const;
};

DeformedAlgebraReport deformed_algebra_report(int cutoff);

/// Largest residual over all brackets of the report.
double verify_deformed_algebra(int cutoff);

}  // namespace lambdaphase
