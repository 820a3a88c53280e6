#include "lambdaphase/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace lambdaphase {
namespace {

// Photon offsets written out here independently of the block code.
constexpr int kOffsetA[3] = {0, 1, 1};
constexpr int kOffsetB[3] = {1, 0, 1};

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
  Eigen::MatrixXcd out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  return out;
}

Eigen::MatrixXcd annihilation(int cutoff) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
  for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Eigen::MatrixXcd number(int cutoff) {
  Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
  for (int k = 0; k <= cutoff; ++k) n(k, k) = static_cast<double>(k);
  return n;
}

// |to><from| on the atom.
Eigen::MatrixXcd atom_ket_bra(int to, int from) {
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(3, 3);
  s(to - 1, from - 1) = 1.0;
  return s;
}

void check_cutoffs(int cutoff_a, int cutoff_b) {
  if (cutoff_a < 1 || cutoff_b < 1) throw std::invalid_argument("oracle: cutoffs must be >= 1");
  const Eigen::Index dim = 3 * static_cast<Eigen::Index>(cutoff_a + 1) * (cutoff_b + 1);
  if (dim > kMaxOracleDimension) throw std::invalid_argument("oracle: full space dimension exceeds 20000");
}

std::vector<double> coherent_by_recurrence(double nbar, int cutoff) {
  std::vector<double> q(static_cast<std::size_t>(cutoff) + 1, 0.0);
  q[0] = std::exp(-0.5 * nbar);
  for (int n = 1; n <= cutoff; ++n)
    q[static_cast<std::size_t>(n)] = q[static_cast<std::size_t>(n - 1)] * std::sqrt(nbar / n);
  return q;
}

}  // namespace

FullSpaceOperator::FullSpaceOperator(int cutoff_a, int cutoff_b, Eigen::MatrixXcd matrix)
    : cutoff_a_(cutoff_a), cutoff_b_(cutoff_b), matrix_(std::move(matrix)) {}

Eigen::Index FullSpaceOperator::index_of(int level, int photons_a, int photons_b) const {
  return (static_cast<Eigen::Index>(level - 1) * (cutoff_a_ + 1) + photons_a) * (cutoff_b_ + 1) + photons_b;
}

FullSpaceOperator build_full_hamiltonian(const SystemParams& params, int cutoff_a, int cutoff_b) {
  check_cutoffs(cutoff_a, cutoff_b);
  const Eigen::MatrixXcd ia = Eigen::MatrixXcd::Identity(cutoff_a + 1, cutoff_a + 1);
  const Eigen::MatrixXcd ib = Eigen::MatrixXcd::Identity(cutoff_b + 1, cutoff_b + 1);
  const Eigen::MatrixXcd a = kron(annihilation(cutoff_a), ib);
  const Eigen::MatrixXcd b = kron(ia, annihilation(cutoff_b));
  const Eigen::MatrixXcd field_id = kron(ia, ib);

  // S_+^{13} = |3><1|, S_+^{23} = |3><2|
  const Eigen::MatrixXcd s_plus_13 = atom_ket_bra(3, 1);
  const Eigen::MatrixXcd s_plus_23 = atom_ket_bra(3, 2);

  Eigen::MatrixXcd h = -params.delta_a * kron(atom_ket_bra(1, 1), field_id) -
                       params.delta_b * kron(atom_ket_bra(2, 2), field_id);
  const Eigen::MatrixXcd va = params.g_a * kron(s_plus_13, a);
  const Eigen::MatrixXcd vb = params.g_b * kron(s_plus_23, b);
  h += va + va.adjoint() + vb + vb.adjoint();
  return FullSpaceOperator(cutoff_a, cutoff_b, std::move(h));
}

FullSpaceOperator excitation_operator_a(int cutoff_a, int cutoff_b) {
  check_cutoffs(cutoff_a, cutoff_b);
  const Eigen::MatrixXcd ib = Eigen::MatrixXcd::Identity(cutoff_b + 1, cutoff_b + 1);
  const Eigen::MatrixXcd field_id = Eigen::MatrixXcd::Identity((cutoff_a + 1) * (cutoff_b + 1), (cutoff_a + 1) * (cutoff_b + 1));
  Eigen::MatrixXcd n = kron(Eigen::MatrixXcd::Identity(3, 3), kron(number(cutoff_a), ib)) -
                       kron(atom_ket_bra(1, 1), field_id) + kron(Eigen::MatrixXcd::Identity(3, 3), field_id);
  return FullSpaceOperator(cutoff_a, cutoff_b, std::move(n));
}

FullSpaceOperator excitation_operator_b(int cutoff_a, int cutoff_b) {
  check_cutoffs(cutoff_a, cutoff_b);
  const Eigen::MatrixXcd ia = Eigen::MatrixXcd::Identity(cutoff_a + 1, cutoff_a + 1);
  const Eigen::MatrixXcd field_id = Eigen::MatrixXcd::Identity((cutoff_a + 1) * (cutoff_b + 1), (cutoff_a + 1) * (cutoff_b + 1));
  Eigen::MatrixXcd n = kron(Eigen::MatrixXcd::Identity(3, 3), kron(ia, number(cutoff_b))) -
                       kron(atom_ket_bra(2, 2), field_id) + kron(Eigen::MatrixXcd::Identity(3, 3), field_id);
  return FullSpaceOperator(cutoff_a, cutoff_b, std::move(n));
}

FullEvolver::FullEvolver(const FullSpaceOperator& h) {
  const Eigen::MatrixXcd& m = h.matrix();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-14 * scale)
    throw std::domain_error("FullEvolver: operator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) throw std::domain_error("FullEvolver: eigendecomposition failed");
  vectors_ = solver.eigenvectors();
  values_ = solver.eigenvalues();
}

Eigen::VectorXcd FullEvolver::evolve(const Eigen::VectorXcd& psi0, double t) const {
  Eigen::VectorXcd coeff = vectors_.adjoint() * psi0;
  for (Eigen::Index k = 0; k < coeff.size(); ++k) coeff(k) *= std::exp(Complex(0.0, -values_(k) * t));
  return vectors_ * coeff;
}

Eigen::VectorXcd full_evolve(const FullSpaceOperator& h, const Eigen::VectorXcd& psi0, double t) {
  if (psi0.size() != h.dimension()) throw std::invalid_argument("full_evolve: dimension mismatch");
  if (std::abs(psi0.norm() - 1.0) > 1e-10) throw std::invalid_argument("full_evolve: psi0 must be normalized");
  return FullEvolver(h).evolve(psi0, t);
}

bool subspace_fits(int excitations_a, int excitations_b, int cutoff_a, int cutoff_b) {
  for (int j = 0; j < 3; ++j) {
    const int pa = excitations_a - kOffsetA[j];
    const int pb = excitations_b - kOffsetB[j];
    if (pa < 0 || pb < 0) continue;
    if (pa > cutoff_a || pb > cutoff_b) return false;
  }
  return true;
}

Eigen::VectorXcd full_initial_state(const SystemParams& params, int cutoff_a, int cutoff_b) {
  check_cutoffs(cutoff_a, cutoff_b);
  const std::vector<double> qa = coherent_by_recurrence(params.nbar_a, cutoff_a);
  const std::vector<double> qb = coherent_by_recurrence(params.nbar_b, cutoff_b);
  const FullSpaceOperator shape(cutoff_a, cutoff_b, Eigen::MatrixXcd());
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(3 * (cutoff_a + 1) * (cutoff_b + 1));
  for (int level = 1; level <= 3; ++level)
    for (int na = 0; na <= cutoff_a; ++na)
      for (int nb = 0; nb <= cutoff_b; ++nb) {
        const int big_a = na + kOffsetA[level - 1];
        const int big_b = nb + kOffsetB[level - 1];
        if (!subspace_fits(big_a, big_b, cutoff_a, cutoff_b)) continue;
        psi(shape.index_of(level, na, nb)) = params.c[static_cast<std::size_t>(level - 1)] *
                                             qa[static_cast<std::size_t>(na)] * qb[static_cast<std::size_t>(nb)];
      }
  return psi / psi.norm();
}

SystemState restrict_to_fitting_subspaces(const SystemState& state, int cutoff_a, int cutoff_b) {
  std::vector<SubspaceAmplitudes> kept;
  double norm = 0.0;
  for (const auto& block : state.blocks()) {
    if (!subspace_fits(block.index().na, block.index().nb, cutoff_a, cutoff_b)) continue;
    kept.push_back(block);
    norm += block.amplitudes.squared_norm();
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& block : kept) block.amplitudes = Complex(scale) * block.amplitudes;
  return SystemState(std::move(kept), state.time());
}

Eigen::VectorXcd embed(const SystemState& state, int cutoff_a, int cutoff_b) {
  const FullSpaceOperator shape(cutoff_a, cutoff_b, Eigen::MatrixXcd());
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(3 * (cutoff_a + 1) * (cutoff_b + 1));
  for (const auto& block : state.blocks())
    for (std::size_t k = 0; k < block.basis.dim(); ++k) {
      const SubspaceMember& m = block.basis[k];
      if (m.photons_a > cutoff_a || m.photons_b > cutoff_b) {
        if (block.amplitudes[k] != 0.0) throw std::invalid_argument("embed: amplitude outside the truncated space");
        continue;
      }
      psi(shape.index_of(m.level, m.photons_a, m.photons_b)) = block.amplitudes[k];
    }
  return psi;
}

OracleComparison compare_with_oracle(const SystemParams& params, int cutoff_a, int cutoff_b,
                                     std::span<const double> times) {
  const SystemState block0 = restrict_to_fitting_subspaces(initial_state(params), cutoff_a, cutoff_b);
  const Eigen::VectorXcd full0 = full_initial_state(params, cutoff_a, cutoff_b);
  const FullSpaceOperator h = build_full_hamiltonian(params, cutoff_a, cutoff_b);
  const FullEvolver evolver(h);
  const Eigen::MatrixXcd na = excitation_operator_a(cutoff_a, cutoff_b).matrix();
  const Eigen::MatrixXcd nb = excitation_operator_b(cutoff_a, cutoff_b).matrix();
  const double na0 = full0.dot(na * full0).real();
  const double nb0 = full0.dot(nb * full0).real();

  OracleComparison out;
  out.initial_difference = (embed(block0, cutoff_a, cutoff_b) - full0).cwiseAbs().maxCoeff();
  for (double t : times) {
    const Eigen::VectorXcd full = evolver.evolve(full0, t);
    const Eigen::VectorXcd block = embed(evolve(block0, params, t), cutoff_a, cutoff_b);
    out.max_difference = std::max(out.max_difference, (block - full).cwiseAbs().maxCoeff());
    out.max_norm_drift = std::max(out.max_norm_drift, std::abs(full.norm() - 1.0));
    out.max_excitation_drift = std::max({out.max_excitation_drift, std::abs(full.dot(na * full).real() - na0),
                                         std::abs(full.dot(nb * full).real() - nb0)});
  }
  out.max_difference = std::max(out.max_difference, out.initial_difference);
  return out;
}

}  // namespace lambdaphase
