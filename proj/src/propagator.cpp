#include "lambdaphase/propagator.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lambdaphase {

Propagator::Propagator(const SystemParams& params) : params_(params) { prepare(initial_state(params)); }

Propagator::Propagator(const SystemParams& params, const SystemState& initial) : params_(params) {
  params_.validate();
  prepare(initial);
}

void Propagator::prepare(const SystemState& initial) {
  start_time_ = initial.time();
  const auto& in = initial.blocks();
  blocks_.resize(in.size());
  const auto count = static_cast<std::ptrdiff_t>(in.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const SubspaceAmplitudes& block = in[static_cast<std::size_t>(k)];
    Prepared p;
    p.basis = block.basis;
    p.eig = eigen_hermitian(block_hamiltonian(params_, block.basis).matrix);
    p.initial = block.amplitudes;
    p.spectral = p.eig.vectors.adjoint() * block.amplitudes;
    blocks_[static_cast<std::size_t>(k)] = std::move(p);
  }
}

SmallMatrix Propagator::propagator(std::size_t block, double t) const {
  return block_evolution(blocks_[block].eig, t);
}

SmallVector Propagator::amplitudes(std::size_t block, double t) const {
  const Prepared& p = blocks_[block];
  SmallVector phased(p.spectral.dim());
  for (std::size_t k = 0; k < phased.dim(); ++k)
    phased[k] = std::exp(Complex(0.0, -p.eig.values[k] * t)) * p.spectral[k];
  return p.eig.vectors * phased;
}

SystemState Propagator::state_at(double t) const {
  std::vector<SubspaceAmplitudes> out(blocks_.size());
  const auto count = static_cast<std::ptrdiff_t>(blocks_.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k);
    out[i] = SubspaceAmplitudes{blocks_[i].basis, amplitudes(i, t)};
  }
  return SystemState(std::move(out), start_time_ + t);
}

Observables observe(const Propagator& propagator, double t) {
  Observables obs;
  obs.time = t;
  for (Transition tr : kAllTransitions) {
    auto& d = obs.distributions[static_cast<std::size_t>(tr)];
    d.transition = tr;
    d.time = t;
  }
  for (std::size_t k = 0; k < propagator.block_count(); ++k) {
    const SubspaceBasis& basis = propagator.basis(k);
    const SmallMatrix u = propagator.propagator(k, t);
    const SmallVector& x = propagator.initial_amplitudes(k);
    for (Transition tr : kAllTransitions)
      accumulate_closed_form(basis, u, x, tr, obs.distributions[static_cast<std::size_t>(tr)].p);
    const SmallVector psi = u * x;
    for (std::size_t m = 0; m < basis.dim(); ++m) {
      const double w = std::norm(psi[m]);
      obs.populations[static_cast<std::size_t>(basis[m].level - 1)] += w;
      obs.norm += w;
    }
  }
  obs.norm = std::sqrt(obs.norm);
  return obs;
}

std::vector<Observables> observe_grid(const Propagator& propagator, std::span<const double> times,
                                      Execution execution) {
  std::vector<Observables> rows(times.size());
  const auto count = static_cast<std::ptrdiff_t>(times.size());
  if (execution == Execution::kSerial) {
    for (std::ptrdiff_t i = 0; i < count; ++i)
      rows[static_cast<std::size_t>(i)] = observe(propagator, times[static_cast<std::size_t>(i)]);
    return rows;
  }
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    rows[static_cast<std::size_t>(i)] = observe(propagator, times[static_cast<std::size_t>(i)]);
  return rows;
}

int available_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace lambdaphase
