#include "lambdaphase/relphase.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lambdaphase {
namespace {

// Formal eigenvector in level space (index = level - 1).
std::array<Complex, 3> formal_vector(Transition t, PhaseLabel label) {
  const auto [lower, upper, spectator] = levels_of(t);
  const double h = 1.0 / std::sqrt(2.0);
  std::array<Complex, 3> v{};
  switch (label) {
    case PhaseLabel::kZero:
      v[static_cast<std::size_t>(spectator - 1)] = 1.0;
      break;
    case PhaseLabel::kPlus:
      v[static_cast<std::size_t>(upper - 1)] = h;
      v[static_cast<std::size_t>(lower - 1)] = -kI * h;
      break;
    case PhaseLabel::kMinus:
      v[static_cast<std::size_t>(upper - 1)] = h;
      v[static_cast<std::size_t>(lower - 1)] = kI * h;
      break;
  }
  return v;
}

Complex row_times(const SmallMatrix& u, std::optional<std::size_t> row, const SmallVector& x) {
  if (!row) return 0.0;
  Complex s = 0.0;
  for (std::size_t k = 0; k < x.dim(); ++k) s += u(*row, k) * x[k];
  return s;
}

}  // namespace

const RelPhaseState* RelPhaseEigenstates::find(PhaseLabel label) const {
  for (const auto& s : states)
    if (s.label == label) return &s;
  return nullptr;
}

RelPhaseEigenstates rel_phase_eigenstates(Transition t, SubspaceIndex index) {
  const SubspaceBasis basis(index);
  if (basis.empty()) throw std::invalid_argument("rel_phase_eigenstates: empty subspace");
  RelPhaseEigenstates out{t, basis, {}};
  for (PhaseLabel label : kAllLabels) {
    const auto formal = formal_vector(t, label);
    SmallVector v(basis.dim());
    bool any = false;
    for (std::size_t k = 0; k < basis.dim(); ++k) {
      v[k] = formal[static_cast<std::size_t>(basis[k].level - 1)];
      any = any || v[k] != 0.0;
    }
    if (any) out.states.push_back({label, v});
  }
  return out;
}

SmallMatrix relative_phase_exponential(Transition t, SubspaceIndex index) {
  const SubspaceBasis basis(index);
  if (basis.dim() != 3) throw std::invalid_argument("relative_phase_exponential: subspace is not three-dimensional");
  // In a full block the member positions coincide with level - 1.
  return phase_exponential_form(t);
}

std::map<JointKey, double> joint_distribution(const SystemState& state, Transition t) {
  std::map<JointKey, double> joint;
  for (const auto& block : state.blocks()) {
    const RelPhaseEigenstates es = rel_phase_eigenstates(t, block.index());
    for (const auto& s : es.states) joint[{block.index(), s.label}] = std::norm(inner(s.vector, block.amplitudes));
  }
  return joint;
}

PhaseDistribution marginal_distribution(const SystemState& state, Transition t) {
  PhaseDistribution d{t, state.time(), {}};
  // std::map iterates in (index, label) order: deterministic summation.
  for (const auto& [key, p] : joint_distribution(state, t)) d.p[static_cast<std::size_t>(key.second)] += p;
  return d;
}

void accumulate_closed_form(const SubspaceBasis& basis, const SmallMatrix& propagator, const SmallVector& initial,
                            Transition t, std::array<double, 3>& out) {
  const auto [lower, upper, spectator] = levels_of(t);
  const Complex a_spec = row_times(propagator, basis.position_of(spectator), initial);
  const Complex a_up = row_times(propagator, basis.position_of(upper), initial);
  const Complex a_low = row_times(propagator, basis.position_of(lower), initial);
  out[0] += std::norm(a_spec);
  out[1] += 0.5 * std::norm(a_up + kI * a_low);
  out[2] += 0.5 * std::norm(a_up - kI * a_low);
}

PhaseDistribution closed_form_distribution(const SystemParams& params, Transition t, double time) {
  const SystemState initial = initial_state(params);
  PhaseDistribution d{t, time, {}};
  for (const auto& block : initial.blocks()) {
    const BlockOperator u = block_evolution(block_hamiltonian(params, block.basis), time);
    accumulate_closed_form(block.basis, u.matrix, block.amplitudes, t, d.p);
  }
  return d;
}

SystemParams trapping_config(double phi, double nbar) {
  SystemParams p;
  p.g_a = 1.0;
  p.g_b = 1.0;
  p.delta_a = 0.0;
  p.delta_b = 0.0;
  p.nbar_a = nbar;
  p.nbar_b = nbar;
  const double h = 1.0 / std::sqrt(2.0);
  p.c = {Complex(h), std::polar(h, phi), Complex(0.0)};
  return p;
}

double verify_deformed_polar(SubspaceIndex index) {
  const SubspaceBasis basis(index);
  if (basis.dim() != 3) throw std::invalid_argument("verify_deformed_polar: subspace is not three-dimensional");

  // X_-^{13} = a^H |1><3| restricted to the block.
  SmallMatrix x_minus(3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      const SubspaceMember& out = basis[r];
      const SubspaceMember& in = basis[c];
      if (out.level == 1 && in.level == 3 && out.photons_a == in.photons_a + 1 && out.photons_b == in.photons_b)
        x_minus(r, c) = std::sqrt(static_cast<double>(out.photons_a));
    }
  const SmallMatrix x_plus = x_minus.adjoint();
  const SmallMatrix modulus =
      spectral_function(eigen_hermitian(x_minus * x_plus), [](double v) { return std::sqrt(std::max(v, 0.0)); });
  const SmallMatrix e_phi = relative_phase_exponential(Transition::k13, index);
  return max_abs_diff(x_minus, modulus * e_phi);
}

}  // namespace lambdaphase
