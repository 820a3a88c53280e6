#pragma once

// u(3) generators of a three-level Lambda atom and the atomic phase
// operators obtained from their polar decomposition.
//
// Levels are numbered 1, 2, 3 (two lower levels, one upper level); matrix
// rows/columns use the zero-based index level - 1.

#include <array>
#include <functional>
#include <numbers>
#include <string_view>

#include "lambdaphase/small_matrix.hpp"

namespace lambdaphase {

using AtomOperator = SmallMatrix;

enum class Transition { k13, k23, k12 };

inline constexpr std::array<Transition, 3> kAllTransitions{Transition::k13, Transition::k23, Transition::k12};

std::string_view to_string(Transition t);
/// Accepts "13", "23", "12"; throws std::invalid_argument otherwise.
Transition parse_transition(std::string_view text);

/// The two levels joined by a transition and the level left out of it.
struct TransitionLevels {
  int lower;
  int upper;
  int spectator;
};
TransitionLevels levels_of(Transition t);

/// Phase labels in the fixed reporting order (0, +pi/2, -pi/2).
enum class PhaseLabel { kZero = 0, kPlus = 1, kMinus = 2 };
inline constexpr std::array<PhaseLabel, 3> kAllLabels{PhaseLabel::kZero, PhaseLabel::kPlus, PhaseLabel::kMinus};

constexpr double phase_angle(PhaseLabel label) {
  switch (label) {
    case PhaseLabel::kPlus:
      return std::numbers::pi / 2.0;
    case PhaseLabel::kMinus:
      return -std::numbers::pi / 2.0;
    default:
      return 0.0;
  }
}

std::string_view to_string(PhaseLabel label);

/// S^{ij} = |j><i|. Throws std::out_of_range unless i, j in {1,2,3}.
AtomOperator generator(int i, int j);

/// S_+^{ij} = S^{ij} for i < j (raises i -> j).
AtomOperator raising(int lower, int upper);
/// S_-^{ij} = S^{ji} for i < j.
AtomOperator lowering(int lower, int upper);
/// S_z^{ij} = (S^{jj} - S^{ii}) / 2.
AtomOperator inversion(int lower, int upper);

/// Unitary phase exponential E = |lower><upper| - |upper><lower| + |spectator><spectator|
/// (phase convention e^{i phi0'} = -1). Only the dipole transitions 13 and 23
/// are accepted; 12 throws std::invalid_argument.
AtomOperator phase_exponential(Transition t);

/// Same construction for any transition, 12 included. Used where the
/// forbidden transition still needs a phase operator (witness, 12 spectrum).
AtomOperator phase_exponential_form(Transition t);

struct PhaseEigensystem {
  Transition transition;
  /// Indexed by PhaseLabel: {0, +pi/2, -pi/2}.
  std::array<double, 3> eigenvalues;
  std::array<SmallVector, 3> eigenvectors;
};

/// Phi_0 = |spectator>, Phi_(+/-) = (|upper> -/+ i|lower>)/sqrt2, so that
/// E |Phi_r> = exp(i phi_r) |Phi_r>.
PhaseEigensystem phase_eigensystem(Transition t);

/// Zero exactly when the 3x3 unitary E has spectrum {1, i, -i}, i.e. phase
/// eigenvalues {0, +pi/2, -pi/2}: max |(E - 1)(E^2 + 1)| + |tr E - 1|.
/// (With eigenvalues drawn from {1, i, -i}, trace 1 forces one of each.)
double phase_spectrum_residual(const AtomOperator& e);

/// max |S_- - sqrt(S_- S_+) E| over matrix entries.
double verify_polar_identity(Transition t);

/// Validated atomic density matrix: Hermitian, unit trace, positive
/// semidefinite, each to 1e-12.
class AtomicDensityMatrix {
 public:
  /// Throws std::invalid_argument on any violated invariant.
  static AtomicDensityMatrix from_matrix(const SmallMatrix& rho);
  /// |psi><psi| for a normalized 3-vector.
  static AtomicDensityMatrix pure(const SmallVector& psi);

  const SmallMatrix& matrix() const { return rho_; }

 private:
  explicit AtomicDensityMatrix(const SmallMatrix& rho) : rho_(rho) {}
  SmallMatrix rho_;
};

inline constexpr double kDensityTolerance = 1e-12;

/// P(phi_r) = Tr[rho |phi_r><phi_r|], indexed by PhaseLabel.
std::array<double, 3> phase_probabilities(Transition t, const AtomicDensityMatrix& rho);

/// <F(phi)> = sum_r F(phi_r) P(phi_r).
double phase_function_mean(const std::function<double(double)>& f, Transition t, const AtomicDensityMatrix& rho);

/// Max-entry distance between E13 E23^H and the closest operator of the form
/// |1><2| + e^{ia}|2><1| - e^{-ia}|3><3|, minimized over a. Strictly positive:
/// atomic phases of different transitions do not compose.
double noncomposition_witness();

/// Largest entrywise residual of [S^{ij}, S^{kl}] - (d_il S^{kj} - d_kj S^{il})
/// over all 81 index combinations.
double commutator_table_residual();

/// Largest residual of [S_+^{13}, S_-^{23}] = -S_+^{12} and [S_+^{13}, S_+^{23}] = 0.
double coupling_relation_residual();

}  // namespace lambdaphase
