#pragma once

// Time-grid evaluation kernels. Every block Hamiltonian is eigendecomposed
// once; each requested time then costs one 3x3 spectral sum per subspace.
//
// Two execution paths produce bit-identical results: the serial reference
// loops over times, and the OpenMP path distributes times across threads.
// Within one time the reduction over subspaces always runs serially in
// ascending (N_a, N_b) order.

#include <array>
#include <span>
#include <vector>

#include "lambdaphase/dynamics.hpp"
#include "lambdaphase/relphase.hpp"

namespace lambdaphase {

enum class Execution { kSerial, kParallel };

class Propagator {
 public:
  /// Starts from initial_state(params).
  explicit Propagator(const SystemParams& params);
  Propagator(const SystemParams& params, const SystemState& initial);

  const SystemParams& params() const { return params_; }
  std::size_t block_count() const { return blocks_.size(); }
  const SubspaceBasis& basis(std::size_t block) const { return blocks_[block].basis; }
  const SmallVector& initial_amplitudes(std::size_t block) const { return blocks_[block].initial; }

  /// Block propagator U(t) for one subspace.
  SmallMatrix propagator(std::size_t block, double t) const;
  /// Evolved amplitudes V exp(-iLt) V^H x for one subspace.
  SmallVector amplitudes(std::size_t block, double t) const;

  /// Full evolved state (blocks evaluated in parallel, order preserved).
  SystemState state_at(double t) const;

 private:
  struct Prepared {
    SubspaceBasis basis;
    HermitianEigen eig;
    SmallVector initial;
    SmallVector spectral;  // V^H x
  };

  void prepare(const SystemState& initial);

  SystemParams params_;
  double start_time_ = 0.0;
  std::vector<Prepared> blocks_;
};

/// Everything reported for one time point.
struct Observables {
  double time = 0.0;
  /// Indexed by static_cast<int>(Transition).
  std::array<PhaseDistribution, 3> distributions{};
  std::array<double, 3> populations{};
  double norm = 0.0;

  const PhaseDistribution& distribution(Transition t) const { return distributions[static_cast<std::size_t>(t)]; }
};

/// Closed-form distributions, populations and norm at one time.
Observables observe(const Propagator& propagator, double t);

std::vector<Observables> observe_grid(const Propagator& propagator, std::span<const double> times,
                                      Execution execution = Execution::kParallel);

/// Threads the parallel path will use.
int available_threads();

}  // namespace lambdaphase
