#include "lambdaphase/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "lambdaphase/hermitian3.hpp"

namespace lambdaphase {
namespace {

std::size_t idx(int level) { return static_cast<std::size_t>(level - 1); }

SmallVector ket(int level) { return SmallVector::basis(3, idx(level)); }

}  // namespace

std::string_view to_string(Transition t) {
  switch (t) {
    case Transition::k13:
      return "13";
    case Transition::k23:
      return "23";
    case Transition::k12:
      return "12";
  }
  return "?";
}

Transition parse_transition(std::string_view text) {
  if (text == "13") return Transition::k13;
  if (text == "23") return Transition::k23;
  if (text == "12") return Transition::k12;
  throw std::invalid_argument("unknown transition '" + std::string(text) + "' (expected 13, 23 or 12)");
}

TransitionLevels levels_of(Transition t) {
  switch (t) {
    case Transition::k13:
      return {1, 3, 2};
    case Transition::k23:
      return {2, 3, 1};
    case Transition::k12:
      return {1, 2, 3};
  }
  throw std::invalid_argument("levels_of: bad transition");
}

std::string_view to_string(PhaseLabel label) {
  switch (label) {
    case PhaseLabel::kZero:
      return "0";
    case PhaseLabel::kPlus:
      return "p";
    case PhaseLabel::kMinus:
      return "m";
  }
  return "?";
}

AtomOperator generator(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3)
    throw std::out_of_range("generator: level index must be 1, 2 or 3");
  return SmallMatrix::unit(3, idx(j), idx(i));
}

AtomOperator raising(int lower, int upper) { return generator(lower, upper); }

AtomOperator lowering(int lower, int upper) { return generator(upper, lower); }

AtomOperator inversion(int lower, int upper) {
  return 0.5 * (generator(upper, upper) - generator(lower, lower));
}

AtomOperator phase_exponential_form(Transition t) {
  const auto [lower, upper, spectator] = levels_of(t);
  return generator(upper, lower) - generator(lower, upper) + generator(spectator, spectator);
}

AtomOperator phase_exponential(Transition t) {
  if (t == Transition::k12)
    throw std::invalid_argument("phase_exponential: no atomic polar decomposition for the 1-2 transition");
  return phase_exponential_form(t);
}

PhaseEigensystem phase_eigensystem(Transition t) {
  if (t == Transition::k12)
    throw std::invalid_argument("phase_eigensystem: no atomic polar decomposition for the 1-2 transition");
  const auto [lower, upper, spectator] = levels_of(t);
  const double h = 1.0 / std::sqrt(2.0);
  PhaseEigensystem es{t, {}, {}};
  for (PhaseLabel label : kAllLabels) es.eigenvalues[static_cast<std::size_t>(label)] = phase_angle(label);
  es.eigenvectors[0] = ket(spectator);
  es.eigenvectors[1] = Complex(h) * (ket(upper) - kI * ket(lower));
  es.eigenvectors[2] = Complex(h) * (ket(upper) + kI * ket(lower));
  return es;
}

double phase_spectrum_residual(const AtomOperator& e) {
  if (e.dim() != 3) throw std::invalid_argument("phase_spectrum_residual: expected a 3x3 operator");
  const AtomOperator id = AtomOperator::identity(3);
  const AtomOperator poly = (e - id) * (e * e + id);
  return poly.max_abs() + std::abs(e.trace() - Complex(1.0));
}

double verify_polar_identity(Transition t) {
  const auto [lower, upper, spectator] = levels_of(t);
  const AtomOperator s_minus = lowering(lower, upper);
  const AtomOperator s_plus = raising(lower, upper);
  const AtomOperator modulus =
      spectral_function(eigen_hermitian(s_minus * s_plus), [](double x) { return std::sqrt(std::max(x, 0.0)); });
  return max_abs_diff(s_minus, modulus * phase_exponential(t));
}

AtomicDensityMatrix AtomicDensityMatrix::from_matrix(const SmallMatrix& rho) {
  if (rho.dim() != 3) throw std::invalid_argument("density matrix must be 3x3");
  if (hermiticity_defect(rho) > kDensityTolerance) throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(rho.trace() - 1.0) > kDensityTolerance) throw std::invalid_argument("density matrix trace is not 1");
  const HermitianEigen eig = eigen_hermitian(rho);
  if (eig.values[0] < -kDensityTolerance) throw std::invalid_argument("density matrix has a negative eigenvalue");
  return AtomicDensityMatrix(rho);
}

AtomicDensityMatrix AtomicDensityMatrix::pure(const SmallVector& psi) { return from_matrix(outer(psi, psi)); }

std::array<double, 3> phase_probabilities(Transition t, const AtomicDensityMatrix& rho) {
  const PhaseEigensystem es = phase_eigensystem(t);
  std::array<double, 3> p{};
  for (std::size_t r = 0; r < 3; ++r) {
    // Tr[rho |v><v|] = <v|rho|v>
    p[r] = inner(es.eigenvectors[r], rho.matrix() * es.eigenvectors[r]).real();
  }
  return p;
}

double phase_function_mean(const std::function<double(double)>& f, Transition t, const AtomicDensityMatrix& rho) {
  const PhaseEigensystem es = phase_eigensystem(t);
  const std::array<double, 3> p = phase_probabilities(t, rho);
  double mean = 0.0;
  for (std::size_t r = 0; r < 3; ++r) mean += f(es.eigenvalues[r]) * p[r];
  return mean;
}

double noncomposition_witness() {
  const AtomOperator product = phase_exponential(Transition::k13) * phase_exponential(Transition::k23).adjoint();
  double best = std::numeric_limits<double>::infinity();
  constexpr int kSteps = 720;
  for (int k = 0; k < kSteps; ++k) {
    const double a = 2.0 * std::numbers::pi * k / kSteps;
    const Complex e = std::polar(1.0, a);
    const AtomOperator candidate = generator(2, 1) + e * generator(1, 2) - std::conj(e) * generator(3, 3);
    best = std::min(best, max_abs_diff(product, candidate));
  }
  return best;
}

double commutator_table_residual() {
  double worst = 0.0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
          AtomOperator expected(3);
          if (i == l) expected = expected + generator(k, j);
          if (k == j) expected = expected - generator(i, l);
          worst = std::max(worst, max_abs_diff(commutator(generator(i, j), generator(k, l)), expected));
        }
  return worst;
}

double coupling_relation_residual() {
  const double first =
      max_abs_diff(commutator(raising(1, 3), lowering(2, 3)), Complex(-1.0) * raising(1, 2));
  const double second = commutator(raising(1, 3), raising(2, 3)).max_abs();
  return std::max(first, second);
}

}  // namespace lambdaphase
