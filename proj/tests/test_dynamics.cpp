#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lambdaphase/dynamics.hpp"
#include "lambdaphase/poisson.hpp"

using namespace lambdaphase;

namespace {

SystemParams mixed_params() {
  SystemParams p;
  p.g_a = 0.9;
  p.g_b = 1.3;
  p.delta_a = 0.2;
  p.delta_b = -0.35;
  p.nbar_a = 3.0;
  p.nbar_b = 1.5;
  p.c = {Complex(0.6, 0.0), Complex(0.0, 0.48), Complex(0.64, 0.0)};
  return p;
}

double max_state_difference(const SystemState& a, const SystemState& b) {
  REQUIRE(a.blocks().size() == b.blocks().size());
  double worst = 0.0;
  for (std::size_t k = 0; k < a.blocks().size(); ++k)
    worst = std::max(worst, max_abs_diff(a.blocks()[k].amplitudes, b.blocks()[k].amplitudes));
  return worst;
}

}  // namespace

TEST_CASE("block Hamiltonian of a generic subspace") {
  SystemParams p = mixed_params();
  const BlockOperator h = block_hamiltonian(p, subspace_basis({4, 2}));
  const double ga = 0.9 * 2.0, gb = 1.3 * std::sqrt(2.0);
  const SmallMatrix expected{{-0.2, 0.0, ga}, {0.0, 0.35, gb}, {ga, gb, 0.0}};
  CHECK(max_abs_diff(h.matrix, expected) < 1e-15);
  CHECK(h.index == SubspaceIndex{4, 2});
}

TEST_CASE("resonant (1,1) block couples both lower levels to the upper one") {
  const BlockOperator h = block_hamiltonian(SystemParams{}, subspace_basis({1, 1}));
  const SmallMatrix expected{{0.0, 0.0, 1.0}, {0.0, 0.0, 1.0}, {1.0, 1.0, 0.0}};
  CHECK(h.matrix == expected);
}

TEST_CASE("edge blocks keep the surviving diagonal entry") {
  const SystemParams p = mixed_params();
  CHECK(block_hamiltonian(p, subspace_basis({0, 3})).matrix(0, 0) == Complex(-0.2));
  CHECK(block_hamiltonian(p, subspace_basis({2, 0})).matrix(0, 0) == Complex(0.35));
  CHECK_THROWS_AS(block_hamiltonian(p, subspace_basis({0, 0})), std::invalid_argument);
}

TEST_CASE("resonant (1,1) propagator in closed form") {
  // With s = sqrt2 g t: U33 = cos s, U11 = (1 + cos s)/2, U12 = (cos s - 1)/2,
  // U13 = -i sin s / sqrt2.
  const BlockOperator h = block_hamiltonian(SystemParams{}, subspace_basis({1, 1}));
  for (double t : {0.0, 0.3, 1.7, 25.0}) {
    const double s = std::numbers::sqrt2 * t;
    const SmallMatrix u = block_evolution(h, t).matrix;
    CHECK(std::abs(u(2, 2) - std::cos(s)) < 1e-13);
    CHECK(std::abs(u(0, 0) - (1.0 + std::cos(s)) / 2.0) < 1e-13);
    CHECK(std::abs(u(0, 1) - (std::cos(s) - 1.0) / 2.0) < 1e-13);
    CHECK(std::abs(u(0, 2) - Complex(0.0, -std::sin(s) / std::numbers::sqrt2)) < 1e-13);
  }
}

TEST_CASE("detuned dim-1 block is a pure phase") {
  SystemParams p;
  p.delta_a = 0.7;
  const SmallMatrix u = block_evolution(block_hamiltonian(p, subspace_basis({0, 4})), 2.0).matrix;
  CHECK(std::abs(u(0, 0) - std::polar(1.0, 1.4)) < 1e-15);
}

TEST_CASE("propagators are unitary and form a group") {
  const SystemParams p = mixed_params();
  for (int na = 0; na <= 5; ++na)
    for (int nb = 0; nb <= 5; ++nb) {
      if (na == 0 && nb == 0) continue;
      const BlockOperator h = block_hamiltonian(p, subspace_basis({na, nb}));
      const SmallMatrix u1 = block_evolution(h, 0.8).matrix;
      const SmallMatrix u2 = block_evolution(h, 2.3).matrix;
      CHECK(unitarity_defect(u1) < 1e-13);
      CHECK(max_abs_diff(u1 * u2, block_evolution(h, 3.1).matrix) < 1e-13);
      CHECK(max_abs_diff(block_evolution(h, -0.8).matrix, u1.adjoint()) < 1e-13);
      CHECK(max_abs_diff(block_evolution(h, 0.0).matrix, SmallMatrix::identity(h.matrix.dim())) < 1e-13);
    }
}

TEST_CASE("initial state amplitudes are c_j Q Q") {
  const SystemParams p = mixed_params();
  const SystemState s = initial_state(p);
  CHECK(std::abs(s.squared_norm() - 1.0) < 1e-13);
  const SubspaceAmplitudes* block = s.find({2, 3});
  REQUIRE(block != nullptr);
  // Level 1: n_a = 2, n_b = 2. Renormalization is below 1e-9 here.
  const Complex expect1 = p.c[0] * poisson_weight(3.0, 2) * poisson_weight(1.5, 2);
  const Complex expect3 = p.c[2] * poisson_weight(3.0, 1) * poisson_weight(1.5, 2);
  CHECK(std::abs(block->amplitudes[0] - expect1) < 1e-9);
  CHECK(std::abs(block->amplitudes[2] - expect3) < 1e-9);
  const Complex exact1 = initial_amplitude(p, subspace_basis({2, 3})[0], 100, 100);
  CHECK(std::abs(exact1 - expect1) < 1e-15);
}

TEST_CASE("vacuum fields populate only edge subspaces") {
  SystemParams p;  // atom in |1>, nbar = 0
  const SystemState s = initial_state(p);
  REQUIRE(s.blocks().size() == 1);
  CHECK(s.blocks()[0].index() == SubspaceIndex{0, 1});
  const SystemState later = evolve(s, p, 5.0);
  CHECK(std::abs(later.blocks()[0].amplitudes[0] - 1.0) < 1e-15);
}

TEST_CASE("evolution preserves norm and is reversible") {
  const SystemParams p = mixed_params();
  const SystemState s0 = initial_state(p);
  const SystemState s1 = evolve(s0, p, 12.5);
  CHECK(s1.time() == 12.5);
  CHECK(std::abs(s1.squared_norm() - 1.0) < 1e-13);
  CHECK(max_state_difference(evolve_backward(s1, p, 12.5), s0) < 1e-13);
  CHECK(max_state_difference(evolve(evolve(s0, p, 5.0), p, 7.5), s1) < 1e-13);
  CHECK_THROWS_AS(evolve(s0, p, -1.0), std::invalid_argument);
}

TEST_CASE("zero couplings freeze populations") {
  SystemParams p = mixed_params();
  p.g_a = p.g_b = 0.0;
  const SystemState s0 = initial_state(p);
  const auto before = level_populations(s0);
  const auto after = level_populations(evolve(s0, p, 40.0));
  for (int k = 0; k < 3; ++k) CHECK(after[k] == doctest::Approx(before[k]).epsilon(1e-14));
  CHECK(before[0] == doctest::Approx(0.36));
}

TEST_CASE("parameter validation names the field") {
  SystemParams p;
  p.nbar_b = -1.0;
  CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("nbar_b"), std::invalid_argument);
  p = SystemParams{};
  p.c = {Complex(1.0), Complex(1.0), Complex(0.0)};
  CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("c"), std::invalid_argument);
  p = SystemParams{};
  p.epsilon = 0.0;
  CHECK_THROWS_AS(initial_state(p), std::invalid_argument);
}

TEST_CASE("SystemState sorts blocks and rejects duplicates") {
  const SubspaceBasis b11 = subspace_basis({1, 1}), b01 = subspace_basis({0, 1});
  const SystemState s({{b11, SmallVector{1.0, 0.0, 0.0}}, {b01, SmallVector{0.0}}}, 0.0);
  CHECK(s.blocks()[0].index() == SubspaceIndex{0, 1});
  CHECK(s.find({3, 3}) == nullptr);
  CHECK_THROWS_AS(SystemState({{b11, SmallVector{1.0, 0.0, 0.0}}, {b11, SmallVector{1.0, 0.0, 0.0}}}, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(SystemState({{b11, SmallVector{1.0}}}, 0.0), std::invalid_argument);
}
