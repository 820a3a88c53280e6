#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lambdaphase/algebra.hpp"

using namespace lambdaphase;

namespace {

// |j><i| written out by hand, independent of generator().
SmallMatrix ket_bra(int j, int i) { return SmallMatrix::unit(3, static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)); }

}  // namespace

TEST_CASE("generators are unit matrices |j><i|") {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(generator(i, j) == ket_bra(j, i));
  CHECK_THROWS_AS(generator(0, 1), std::out_of_range);
  CHECK_THROWS_AS(generator(1, 4), std::out_of_range);
}

TEST_CASE("u(3) commutation relations hold exactly") {
  CHECK(commutator_table_residual() == 0.0);
  // One entry spelled out: [S^{13}, S^{31}] = S^{33} - S^{11}.
  CHECK(commutator(generator(1, 3), generator(3, 1)) == generator(3, 3) - generator(1, 1));
  CHECK(coupling_relation_residual() == 0.0);
  CHECK(commutator(raising(1, 3), lowering(2, 3)) == Complex(-1.0) * raising(1, 2));
}

TEST_CASE("ladder operators and inversion") {
  CHECK(raising(1, 3) == ket_bra(3, 1));
  CHECK(lowering(1, 3) == ket_bra(1, 3));
  CHECK(inversion(1, 3) == Complex(0.5) * (ket_bra(3, 3) - ket_bra(1, 1)));
  CHECK(commutator(raising(2, 3), lowering(2, 3)) == Complex(2.0) * inversion(2, 3));
}

TEST_CASE("phase exponential entries") {
  const SmallMatrix e13 = ket_bra(1, 3) - ket_bra(3, 1) + ket_bra(2, 2);
  CHECK(phase_exponential(Transition::k13) == e13);
  const SmallMatrix e23 = ket_bra(2, 3) - ket_bra(3, 2) + ket_bra(1, 1);
  CHECK(phase_exponential(Transition::k23) == e23);
  CHECK_THROWS_AS(phase_exponential(Transition::k12), std::invalid_argument);
  CHECK(unitarity_defect(phase_exponential_form(Transition::k12)) == 0.0);
}

TEST_CASE("phase spectrum is exactly {0, +pi/2, -pi/2}") {
  for (Transition t : kAllTransitions) CHECK(phase_spectrum_residual(phase_exponential_form(t)) == 0.0);
  // The identity has spectrum {1,1,1}: trace 3 flags it.
  CHECK(phase_spectrum_residual(SmallMatrix::identity(3)) > 1.0);
  // diag(1, 1, -1) passes the minimal polynomial test only if -1 were allowed.
  const SmallMatrix d = ket_bra(1, 1) + ket_bra(2, 2) - ket_bra(3, 3);
  CHECK(phase_spectrum_residual(d) > 0.0);
}

TEST_CASE("phase eigensystem satisfies E v = exp(i phi) v") {
  for (Transition t : {Transition::k13, Transition::k23}) {
    const PhaseEigensystem es = phase_eigensystem(t);
    const SmallMatrix e = phase_exponential(t);
    CHECK(es.eigenvalues[0] == 0.0);
    CHECK(es.eigenvalues[1] == std::numbers::pi / 2);
    CHECK(es.eigenvalues[2] == -std::numbers::pi / 2);
    for (std::size_t r = 0; r < 3; ++r) {
      const Complex lambda = std::polar(1.0, es.eigenvalues[r]);
      CHECK(max_abs_diff(e * es.eigenvectors[r], lambda * es.eigenvectors[r]) < 1e-15);
      for (std::size_t s = 0; s < 3; ++s)
        CHECK(std::abs(inner(es.eigenvectors[r], es.eigenvectors[s]) - (r == s ? 1.0 : 0.0)) < 1e-15);
    }
  }
}

TEST_CASE("spectator is the zero-phase state") {
  const PhaseEigensystem es = phase_eigensystem(Transition::k13);
  CHECK(max_abs_diff(es.eigenvectors[0], SmallVector::basis(3, 1)) == 0.0);
  const PhaseEigensystem es23 = phase_eigensystem(Transition::k23);
  CHECK(max_abs_diff(es23.eigenvectors[0], SmallVector::basis(3, 0)) == 0.0);
}

TEST_CASE("polar identity S_- = sqrt(S_- S_+) E") {
  CHECK(verify_polar_identity(Transition::k13) < 1e-12);
  CHECK(verify_polar_identity(Transition::k23) < 1e-12);
}

TEST_CASE("phase probabilities of simple atomic states") {
  const auto ground = AtomicDensityMatrix::pure(SmallVector::basis(3, 0));
  const auto p13 = phase_probabilities(Transition::k13, ground);
  CHECK(p13[0] == doctest::Approx(0.0));
  CHECK(p13[1] == doctest::Approx(0.5));
  CHECK(p13[2] == doctest::Approx(0.5));
  const auto p23 = phase_probabilities(Transition::k23, ground);
  CHECK(p23[0] == doctest::Approx(1.0));

  // (|3> - i|1>)/sqrt2 is the +pi/2 eigenvector of E13.
  const double h = std::numbers::sqrt2 / 2;
  const auto plus = AtomicDensityMatrix::pure(SmallVector{Complex(0, -h), 0.0, h});
  const auto pp = phase_probabilities(Transition::k13, plus);
  CHECK(pp[1] == doctest::Approx(1.0));
  CHECK(phase_function_mean([](double phi) { return phi; }, Transition::k13, plus) ==
        doctest::Approx(std::numbers::pi / 2));
  CHECK(phase_function_mean([](double phi) { return std::cos(phi); }, Transition::k13, ground) ==
        doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("density matrix validation") {
  CHECK_THROWS_AS(AtomicDensityMatrix::from_matrix(SmallMatrix::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(AtomicDensityMatrix::from_matrix(ket_bra(1, 2) + ket_bra(1, 1)), std::invalid_argument);
  // Unit trace and Hermitian but with a negative eigenvalue.
  const SmallMatrix neg = Complex(1.5) * ket_bra(1, 1) - Complex(0.5) * ket_bra(2, 2);
  CHECK_THROWS_AS(AtomicDensityMatrix::from_matrix(neg), std::invalid_argument);
  CHECK_THROWS_AS(AtomicDensityMatrix::from_matrix(SmallMatrix::identity(2)), std::invalid_argument);
  CHECK_NOTHROW(AtomicDensityMatrix::from_matrix(Complex(1.0 / 3.0) * SmallMatrix::identity(3)));
}

TEST_CASE("phases of different transitions do not compose") {
  CHECK(noncomposition_witness() == doctest::Approx(1.0));
}

TEST_CASE("transition names round trip") {
  for (Transition t : kAllTransitions) CHECK(parse_transition(to_string(t)) == t);
  CHECK_THROWS_AS(parse_transition("31"), std::invalid_argument);
  CHECK(levels_of(Transition::k12).spectator == 3);
  CHECK(levels_of(Transition::k23).lower == 2);
}
