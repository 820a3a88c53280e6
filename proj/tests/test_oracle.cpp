#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lambdaphase/oracle.hpp"
#include "lambdaphase/relphase.hpp"

using namespace lambdaphase;

TEST_CASE("zero coupling gives the diagonal detunings") {
  SystemParams p;
  p.g_a = p.g_b = 0.0;
  p.delta_a = 0.3;
  p.delta_b = 0.8;
  const FullSpaceOperator h = build_full_hamiltonian(p, 2, 3);
  CHECK(h.dimension() == 3 * 3 * 4);
  const Eigen::MatrixXcd& m = h.matrix();
  CHECK((m - Eigen::MatrixXcd(m.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
  CHECK(m(h.index_of(1, 1, 2), h.index_of(1, 1, 2)) == Complex(-0.3));
  CHECK(m(h.index_of(2, 0, 3), h.index_of(2, 0, 3)) == Complex(-0.8));
  CHECK(m(h.index_of(3, 2, 0), h.index_of(3, 2, 0)) == Complex(0.0));
}

TEST_CASE("full Hamiltonian entries match the embedded blocks") {
  SystemParams p;
  p.g_a = 0.7;
  p.g_b = 1.1;
  p.delta_a = -0.2;
  constexpr int cutoff = 3;
  const FullSpaceOperator h = build_full_hamiltonian(p, cutoff, cutoff);
  Eigen::MatrixXcd assembled = Eigen::MatrixXcd::Zero(h.dimension(), h.dimension());
  for (int na = 0; na <= cutoff + 1; ++na)
    for (int nb = 0; nb <= cutoff + 1; ++nb) {
      if (na == 0 && nb == 0) continue;
      const SubspaceBasis basis = subspace_basis({na, nb});
      const SmallMatrix block = block_hamiltonian(p, basis).matrix;
      for (std::size_t r = 0; r < basis.dim(); ++r)
        for (std::size_t c = 0; c < basis.dim(); ++c) {
          const auto& mr = basis[r];
          const auto& mc = basis[c];
          if (mr.photons_a > cutoff || mr.photons_b > cutoff || mc.photons_a > cutoff || mc.photons_b > cutoff)
            continue;
          assembled(h.index_of(mr.level, mr.photons_a, mr.photons_b), h.index_of(mc.level, mc.photons_a, mc.photons_b)) =
              block(r, c);
        }
    }
  CHECK((assembled - h.matrix()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("excitation numbers are conserved by the full Hamiltonian") {
  SystemParams p;
  p.delta_b = 0.5;
  const FullSpaceOperator h = build_full_hamiltonian(p, 5, 4);
  const Eigen::MatrixXcd na = excitation_operator_a(5, 4).matrix();
  const Eigen::MatrixXcd nb = excitation_operator_b(5, 4).matrix();
  CHECK((h.matrix() * na - na * h.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((h.matrix() * nb - nb * h.matrix()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("block evolution agrees with dense evolution at desk scale") {
  SystemParams p;
  p.nbar_a = 1.0;
  p.nbar_b = 1.0;
  std::vector<double> times;
  for (int k = 0; k < 50; ++k) times.push_back(2.0 * std::numbers::pi * 2.0 * k / 49.0);
  const OracleComparison cmp = compare_with_oracle(p, 8, 8, times);
  CHECK(cmp.initial_difference < 1e-14);
  CHECK(cmp.max_difference < 1e-8);
  CHECK(cmp.max_norm_drift < 1e-10);
  CHECK(cmp.max_excitation_drift < 1e-8);

  const SystemParams dark = trapping_config(std::numbers::pi, 0.8);
  CHECK(compare_with_oracle(dark, 6, 6, times).max_difference < 1e-8);
}

TEST_CASE("full_evolve at t = 0 returns the input") {
  SystemParams p;
  p.nbar_a = 0.5;
  const FullSpaceOperator h = build_full_hamiltonian(p, 3, 3);
  const Eigen::VectorXcd psi = full_initial_state(p, 3, 3);
  CHECK((full_evolve(h, psi, 0.0) - psi).cwiseAbs().maxCoeff() < 1e-14);
  CHECK_THROWS_AS(full_evolve(h, 2.0 * psi, 1.0), std::invalid_argument);
}

TEST_CASE("oracle guards") {
  SystemParams p;
  CHECK_THROWS_AS(build_full_hamiltonian(p, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_full_hamiltonian(p, 100, 100), std::invalid_argument);
  CHECK(subspace_fits(3, 3, 3, 3));
  CHECK_FALSE(subspace_fits(4, 1, 3, 3));
}
