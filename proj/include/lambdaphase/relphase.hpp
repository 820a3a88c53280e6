#pragma once

// Relative phase between a field mode and an atomic dipole.
//
// Inside a subspace (N_a, N_b) the unitary part of the polar decomposition
// of the deformed ladder operator (X_-^{13} = a^H S_-^{13}, etc.) is
//
//   E^{13}_Phi = |1; N_a, N_b-1><3; N_a-1, N_b-1| - |3; ..><1; ..| + |2; N_a-1, N_b><2; ..|
//
// with eigenvalues exp(i phi), phi in {0, +pi/2, -pi/2}. In the block basis
// this is the atomic construction applied to the subspace members, so
//   Phi_0 = |spectator member>,  Phi_(+/-) = (|upper member> -/+ i |lower member>) / sqrt2.
//
// Edge subspaces (dimension 1) keep the same formal vectors restricted to the
// members that exist, without renormalization: a spectator member belongs
// wholly to Phi_0, a lower or upper member splits evenly between Phi_+ and
// Phi_-. The projectors then still resolve the identity on every block.

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lambdaphase/algebra.hpp"
#include "lambdaphase/dynamics.hpp"

namespace lambdaphase {

struct RelPhaseState {
  PhaseLabel label;
  /// Components in the SubspaceBasis order.
  SmallVector vector;
};

struct RelPhaseEigenstates {
  Transition transition;
  SubspaceBasis basis;
  /// Labels whose formal vector has at least one surviving member, in the
  /// order (0, +, -).
  std::vector<RelPhaseState> states;

  SubspaceIndex index() const { return basis.index(); }
  const RelPhaseState* find(PhaseLabel label) const;
};

/// Throws std::invalid_argument for the empty subspace (0, 0).
RelPhaseEigenstates rel_phase_eigenstates(Transition t, SubspaceIndex index);

/// Block form of E_Phi for a transition in a three-dimensional subspace.
/// Throws std::invalid_argument for edge subspaces.
SmallMatrix relative_phase_exponential(Transition t, SubspaceIndex index);

/// P(Phi_0), P(Phi_+), P(Phi_-) for one transition at one time.
struct PhaseDistribution {
  Transition transition = Transition::k13;
  double time = 0.0;
  std::array<double, 3> p{};

  double p0() const { return p[0]; }
  double p_plus() const { return p[1]; }
  double p_minus() const { return p[2]; }
  double total() const { return p[0] + p[1] + p[2]; }
};

using JointKey = std::pair<SubspaceIndex, PhaseLabel>;

/// |<Phi_r|Psi>|^2 per subspace and label.
std::map<JointKey, double> joint_distribution(const SystemState& state, Transition t);

/// Sum of the joint distribution over subspaces (projection route).
PhaseDistribution marginal_distribution(const SystemState& state, Transition t);

/// Per-subspace terms of the closed-form distribution: with x_j the initial
/// amplitudes (Q Q c_j) and U the block propagator,
///   P_0 += |sum_j x_j U_sj|^2,  P_(+/-) += |sum_j x_j (U_uj +/- i U_lj)|^2 / 2,
/// where s, u, l are the spectator, upper and lower levels; U_ij vanishes
/// when member i or j does not exist.
void accumulate_closed_form(const SubspaceBasis& basis, const SmallMatrix& propagator, const SmallVector& initial,
                            Transition t, std::array<double, 3>& out);

/// Closed-form marginal distribution evaluated directly from the parameters
/// (production route; independent of the eigenstate projections).
PhaseDistribution closed_form_distribution(const SystemParams& params, Transition t, double time);

/// Lower-level superposition (|1> + e^{i phi}|2>)/sqrt2 with nbar_a = nbar_b =
/// nbar, g_a = g_b = 1 and zero detunings. With zero-phase fields the dark
/// (trapped) choice is phi = pi.
SystemParams trapping_config(double phi, double nbar);

/// Residual of X_-^{13} = sqrt(X_-^{13} X_+^{13}) E^{13}_Phi inside a
/// three-dimensional subspace. Throws std::invalid_argument otherwise.
double verify_deformed_polar(SubspaceIndex index);

}  // namespace lambdaphase
