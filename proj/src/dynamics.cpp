#include "lambdaphase/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lambdaphase/poisson.hpp"

namespace lambdaphase {
namespace {

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("SystemParams.") + field + ": " + what);
}

std::vector<double> coherent_amplitudes(double nbar, int cutoff) {
  std::vector<double> q(static_cast<std::size_t>(cutoff) + 1);
  for (int n = 0; n <= cutoff; ++n) q[static_cast<std::size_t>(n)] = poisson_weight(nbar, n);
  return q;
}

SystemState apply_blocks(const SystemState& state, const SystemParams& params, double signed_t) {
  const auto& in = state.blocks();
  std::vector<SubspaceAmplitudes> out(in.size());
  const auto count = static_cast<std::ptrdiff_t>(in.size());
#pragma omp parallel for schedule(dynamic, 32)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const SubspaceAmplitudes& block = in[static_cast<std::size_t>(k)];
    const BlockOperator u = block_evolution(block_hamiltonian(params, block.basis), signed_t);
    out[static_cast<std::size_t>(k)] = SubspaceAmplitudes{block.basis, u.matrix * block.amplitudes};
  }
  return SystemState(std::move(out), state.time() + signed_t);
}

}  // namespace

void SystemParams::validate() const {
  require(std::isfinite(g_a) && g_a >= 0.0, "g_a", "must be finite and >= 0");
  require(std::isfinite(g_b) && g_b >= 0.0, "g_b", "must be finite and >= 0");
  require(std::isfinite(delta_a), "delta_a", "must be finite");
  require(std::isfinite(delta_b), "delta_b", "must be finite");
  require(std::isfinite(nbar_a) && nbar_a >= 0.0, "nbar_a", "must be finite and >= 0");
  require(std::isfinite(nbar_b) && nbar_b >= 0.0, "nbar_b", "must be finite and >= 0");
  require(epsilon > 0.0 && epsilon < 1.0, "epsilon", "must lie in (0, 1)");
  double norm = 0.0;
  for (const Complex& ci : c) {
    require(std::isfinite(ci.real()) && std::isfinite(ci.imag()), "c", "amplitudes must be finite");
    norm += std::norm(ci);
  }
  require(std::abs(norm - 1.0) <= kAmplitudeNormTolerance, "c", "squared amplitudes must sum to 1");
}

BlockOperator block_hamiltonian(const SystemParams& params, const SubspaceBasis& basis) {
  if (basis.empty()) throw std::invalid_argument("block_hamiltonian: empty subspace");
  const SubspaceIndex index = basis.index();
  const double coupling_a = params.g_a * std::sqrt(static_cast<double>(index.na));
  const double coupling_b = params.g_b * std::sqrt(static_cast<double>(index.nb));

  // Operator form in level order (1, 2, 3); rows/columns of eliminated
  // members are dropped.
  const double diagonal[3] = {-params.delta_a, -params.delta_b, 0.0};
  const double full[3][3] = {{diagonal[0], 0.0, coupling_a}, {0.0, diagonal[1], coupling_b}, {coupling_a, coupling_b, diagonal[2]}};

  SmallMatrix h(basis.dim());
  for (std::size_t r = 0; r < basis.dim(); ++r)
    for (std::size_t c = 0; c < basis.dim(); ++c)
      h(r, c) = full[basis[r].level - 1][basis[c].level - 1];
  return {index, h};
}

SmallMatrix block_evolution(const HermitianEigen& eig, double t) {
  return spectral_function(eig, [t](double lambda) { return std::exp(Complex(0.0, -lambda * t)); });
}

BlockOperator block_evolution(const BlockOperator& h, double t) {
  if (t == 0.0) {
    // Still validates Hermiticity.
    (void)eigen_hermitian(h.matrix);
    return {h.index, SmallMatrix::identity(h.matrix.dim())};
  }
  return {h.index, block_evolution(eigen_hermitian(h.matrix), t)};
}

SystemState::SystemState(std::vector<SubspaceAmplitudes> blocks, double time)
    : blocks_(std::move(blocks)), time_(time) {
  std::sort(blocks_.begin(), blocks_.end(),
            [](const SubspaceAmplitudes& x, const SubspaceAmplitudes& y) { return x.index() < y.index(); });
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (blocks_[k].amplitudes.dim() != blocks_[k].basis.dim())
      throw std::invalid_argument("SystemState: amplitude length does not match subspace dimension");
    if (k > 0 && blocks_[k - 1].index() == blocks_[k].index())
      throw std::invalid_argument("SystemState: duplicate subspace");
  }
}

double SystemState::squared_norm() const {
  double s = 0.0;
  for (const auto& block : blocks_) s += block.amplitudes.squared_norm();
  return s;
}

const SubspaceAmplitudes* SystemState::find(SubspaceIndex index) const {
  const auto it = std::lower_bound(blocks_.begin(), blocks_.end(), index,
                                   [](const SubspaceAmplitudes& b, SubspaceIndex i) { return b.index() < i; });
  if (it == blocks_.end() || it->index() != index) return nullptr;
  return &*it;
}

Complex initial_amplitude(const SystemParams& params, const SubspaceMember& member, int cutoff_a, int cutoff_b) {
  if (member.photons_a < 0 || member.photons_b < 0) return 0.0;
  if (member.photons_a > cutoff_a || member.photons_b > cutoff_b) return 0.0;
  return poisson_weight(params.nbar_a, member.photons_a) * poisson_weight(params.nbar_b, member.photons_b) *
         params.c[static_cast<std::size_t>(member.level - 1)];
}

SystemState initial_state(const SystemParams& params) {
  params.validate();
  const int cutoff_a = truncation_cutoff(params.nbar_a, params.epsilon);
  const int cutoff_b = truncation_cutoff(params.nbar_b, params.epsilon);
  const std::vector<double> qa = coherent_amplitudes(params.nbar_a, cutoff_a);
  const std::vector<double> qb = coherent_amplitudes(params.nbar_b, cutoff_b);

  std::vector<SubspaceAmplitudes> blocks;
  double norm = 0.0;
  // Members have photons_a <= N_a and photons_a >= N_a - 1, so N_a <= cutoff_a + 1.
  for (int na = 0; na <= cutoff_a + 1; ++na) {
    for (int nb = 0; nb <= cutoff_b + 1; ++nb) {
      const SubspaceBasis basis({na, nb});
      if (basis.empty()) continue;
      SmallVector amp(basis.dim());
      bool any = false;
      for (std::size_t k = 0; k < basis.dim(); ++k) {
        const SubspaceMember& m = basis[k];
        if (m.photons_a > cutoff_a || m.photons_b > cutoff_b) continue;
        amp[k] = qa[static_cast<std::size_t>(m.photons_a)] * qb[static_cast<std::size_t>(m.photons_b)] *
                 params.c[static_cast<std::size_t>(m.level - 1)];
        any = any || amp[k] != 0.0;
      }
      if (!any) continue;
      norm += amp.squared_norm();
      blocks.push_back({basis, amp});
    }
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& block : blocks) block.amplitudes = Complex(scale) * block.amplitudes;
  return SystemState(std::move(blocks), 0.0);
}

SystemState evolve(const SystemState& state, const SystemParams& params, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("evolve: t must be >= 0");
  return apply_blocks(state, params, t);
}

SystemState evolve_backward(const SystemState& state, const SystemParams& params, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("evolve_backward: t must be >= 0");
  return apply_blocks(state, params, -t);
}

std::array<double, 3> level_populations(const SystemState& state) {
  std::array<double, 3> pops{};
  for (const auto& block : state.blocks())
    for (std::size_t k = 0; k < block.basis.dim(); ++k)
      pops[static_cast<std::size_t>(block.basis[k].level - 1)] += std::norm(block.amplitudes[k]);
  return pops;
}

}  // namespace lambdaphase
