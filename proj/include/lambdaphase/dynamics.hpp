#pragma once

// Exact dynamics of a Lambda atom coupled to two quantized modes, in the
// interaction picture. The interaction Hamiltonian
//
//   H_int = -D_a S^{11} - D_b S^{22} + g_a (a S_+^{13} + h.c.) + g_b (b S_+^{23} + h.c.)
//
// commutes with N_a and N_b, so it is block diagonal over subspaces (N_a, N_b)
// of dimension <= 3 and every block is evolved exactly.

#include <array>
#include <vector>

#include "lambdaphase/hermitian3.hpp"
#include "lambdaphase/small_matrix.hpp"
#include "lambdaphase/subspace.hpp"

namespace lambdaphase {

/// Full experiment configuration. Couplings and detunings share one
/// (arbitrary) frequency unit; time is in its inverse.
struct SystemParams {
  double g_a = 1.0;
  double g_b = 1.0;
  /// D_a = w_31 - w_a
  double delta_a = 0.0;
  /// D_b = w_32 - w_b
  double delta_b = 0.0;
  double nbar_a = 0.0;
  double nbar_b = 0.0;
  /// Initial atomic amplitudes c_1, c_2, c_3.
  std::array<Complex, 3> c{1.0, 0.0, 0.0};
  /// Poisson-tail truncation threshold per mode.
  double epsilon = 1e-10;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

inline constexpr double kAmplitudeNormTolerance = 1e-12;

/// A Hermitian or unitary matrix acting on one subspace.
struct BlockOperator {
  SubspaceIndex index;
  SmallMatrix matrix;
};

/// Restriction of H_int to the subspace, in the basis order of `basis`:
///   [[-D_a, 0, g_a sqrt(N_a)], [0, -D_b, g_b sqrt(N_b)], [g_a sqrt(N_a), g_b sqrt(N_b), 0]]
/// dim-1 blocks keep the surviving diagonal entry. Throws on an empty basis.
BlockOperator block_hamiltonian(const SystemParams& params, const SubspaceBasis& basis);

/// U(t) = V exp(-i L t) V^H. Negative t gives U(t)^H = U(-t).
/// Throws std::domain_error for a non-Hermitian input.
BlockOperator block_evolution(const BlockOperator& h, double t);

/// Same, reusing an eigendecomposition of the block Hamiltonian.
SmallMatrix block_evolution(const HermitianEigen& eig, double t);

/// Amplitudes of one subspace, in the order of its basis members.
struct SubspaceAmplitudes {
  SubspaceBasis basis;
  SmallVector amplitudes;

  SubspaceIndex index() const { return basis.index(); }
};

/// Global wavefunction: subspace amplitudes kept sorted by SubspaceIndex.
class SystemState {
 public:
  SystemState() = default;
  /// Sorts the blocks; throws std::invalid_argument on duplicates or on an
  /// amplitude vector whose length differs from the basis dimension.
  SystemState(std::vector<SubspaceAmplitudes> blocks, double time);

  const std::vector<SubspaceAmplitudes>& blocks() const { return blocks_; }
  double time() const { return time_; }
  double squared_norm() const;
  /// nullptr when the subspace carries no amplitude.
  const SubspaceAmplitudes* find(SubspaceIndex index) const;

 private:
  std::vector<SubspaceAmplitudes> blocks_;
  double time_ = 0.0;
};

/// Atomic superposition times a two-mode coherent state (real amplitudes),
/// each mode truncated at truncation_cutoff(nbar, epsilon), renormalized to 1.
/// Subspaces whose amplitudes are all exactly zero are omitted.
SystemState initial_state(const SystemParams& params);

/// Amplitude of the initial product state on one bare member; zero for
/// photon numbers beyond the cutoffs. Not renormalized.
Complex initial_amplitude(const SystemParams& params, const SubspaceMember& member, int cutoff_a, int cutoff_b);

/// Applies U(t) per subspace. Requires t >= 0; result time is state.time() + t.
SystemState evolve(const SystemState& state, const SystemParams& params, double t);

/// Applies U(t)^H per subspace, undoing evolve(state, params, t).
SystemState evolve_backward(const SystemState& state, const SystemParams& params, double t);

/// Populations of levels 1, 2, 3.
std::array<double, 3> level_populations(const SystemState& state);

}  // namespace lambdaphase
