#include "lambdaphase/deformed.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lambdaphase {
namespace {

Eigen::MatrixXcd comm(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) { return x * y - y * x; }

}  // namespace

DeformedGenerators::DeformedGenerators(int cutoff) : cutoff_(cutoff), dim_(0) {
  if (cutoff < 2) throw std::invalid_argument("DeformedGenerators: cutoff must be >= 2");
  const Eigen::Index levels = cutoff + 1;
  dim_ = 3 * levels * levels;

  a = Eigen::MatrixXcd::Zero(dim_, dim_);
  b = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (int level = 1; level <= 3; ++level)
    for (int na = 0; na <= cutoff; ++na)
      for (int nb = 0; nb <= cutoff; ++nb) {
        if (na > 0) a(index_of(level, na - 1, nb), index_of(level, na, nb)) = std::sqrt(static_cast<double>(na));
        if (nb > 0) b(index_of(level, na, nb - 1), index_of(level, na, nb)) = std::sqrt(static_cast<double>(nb));
      }

  identity = Eigen::MatrixXcd::Identity(dim_, dim_);
  x13_plus = a * atomic(1, 3);
  x13_minus = x13_plus.adjoint();
  x23_plus = b * atomic(2, 3);
  x23_minus = x23_plus.adjoint();
  y12_plus = a * b.adjoint() * atomic(1, 2);
  y12_minus = y12_plus.adjoint();
  excitations_a = a.adjoint() * a - atomic(1, 1) + identity;
  excitations_b = b.adjoint() * b - atomic(2, 2) + identity;
}

Eigen::Index DeformedGenerators::index_of(int level, int photons_a, int photons_b) const {
  const Eigen::Index levels = cutoff_ + 1;
  return ((level - 1) * levels + photons_a) * levels + photons_b;
}

Eigen::MatrixXcd DeformedGenerators::atomic(int i, int j) const {
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (int na = 0; na <= cutoff_; ++na)
    for (int nb = 0; nb <= cutoff_; ++nb) s(index_of(j, na, nb), index_of(i, na, nb)) = 1.0;
  return s;
}

Eigen::MatrixXcd DeformedGenerators::relative_phase_exponential_13() const {
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(dim_, dim_);
  // Three-dimensional subspaces fully inside the space: 1 <= N_a, N_b <= cutoff.
  for (int big_a = 1; big_a <= cutoff_; ++big_a)
    for (int big_b = 1; big_b <= cutoff_; ++big_b) {
      const Eigen::Index one = index_of(1, big_a, big_b - 1);
      const Eigen::Index two = index_of(2, big_a - 1, big_b);
      const Eigen::Index three = index_of(3, big_a - 1, big_b - 1);
      e(one, three) = 1.0;
      e(three, one) = -1.0;
      e(two, two) = 1.0;
    }
  return e;
}

double DeformedGenerators::interior_residual(const Eigen::MatrixXcd& m) const {
  double worst = 0.0;
  for (int level = 1; level <= 3; ++level)
    for (int na = 0; na < cutoff_; ++na)
      for (int nb = 0; nb < cutoff_; ++nb)
        worst = std::max(worst, m.col(index_of(level, na, nb)).cwiseAbs().maxCoeff());
  return worst;
}

double DeformedAlgebraReport::max() const {
  return std::max({bracket13, bracket23, bracket12, cross_bracket, commuting_plus, vacuum, phase_commutes,
                   phase_unitary});
}

DeformedAlgebraReport deformed_algebra_report(int cutoff) {
  const DeformedGenerators g(cutoff);
  const Eigen::MatrixXcd s11 = g.atomic(1, 1);
  const Eigen::MatrixXcd s22 = g.atomic(2, 2);
  const Eigen::MatrixXcd& id = g.identity;

  DeformedAlgebraReport r;
  r.bracket13 = g.interior_residual(comm(g.x13_plus, g.x13_minus) - g.excitations_a * (id - 2.0 * s11 - s22));
  r.bracket23 = g.interior_residual(comm(g.x23_plus, g.x23_minus) - g.excitations_b * (id - 2.0 * s22 - s11));
  r.bracket12 =
      g.interior_residual(comm(g.y12_plus, g.y12_minus) - g.excitations_a * g.excitations_b * (s22 - s11));
  r.cross_bracket = g.interior_residual(comm(g.x13_plus, g.x23_minus) + g.y12_plus);
  r.commuting_plus = g.interior_residual(comm(g.x13_plus, g.x23_plus));

  for (int na = 0; na <= cutoff; ++na)
    for (int nb = 0; nb <= cutoff; ++nb)
      r.vacuum = std::max(r.vacuum, g.x13_minus.col(g.index_of(1, na, nb)).cwiseAbs().maxCoeff());

  const Eigen::MatrixXcd e = g.relative_phase_exponential_13();
  r.phase_commutes = std::max(comm(e, g.excitations_a).cwiseAbs().maxCoeff(),
                              comm(e, g.excitations_b).cwiseAbs().maxCoeff());
  // E E^H is the projector onto the complete subspaces.
  const Eigen::MatrixXcd projector = e.adjoint() * e;
  r.phase_unitary = std::max((e * e.adjoint() - projector).cwiseAbs().maxCoeff(),
                             (projector * projector - projector).cwiseAbs().maxCoeff());
  return r;
}

double verify_deformed_algebra(int cutoff) { return deformed_algebra_report(cutoff).max(); }

}  // namespace lambdaphase
