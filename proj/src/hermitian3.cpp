#include "lambdaphase/hermitian3.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace lambdaphase {
namespace {

constexpr int kMaxSweeps = 60;

void check_hermitian(const SmallMatrix& h) {
  const double tol = 1e-12 * std::max(1.0, h.max_abs());
  if (hermiticity_defect(h) > tol) throw std::domain_error("eigen_hermitian: matrix is not Hermitian");
}

double off_diagonal_max(const SmallMatrix& b) {
  double m = 0.0;
  for (std::size_t p = 0; p < b.dim(); ++p)
    for (std::size_t q = 0; q < b.dim(); ++q)
      if (p != q) m = std::max(m, std::abs(b(p, q)));
  return m;
}

// Cyclic Jacobi sweeps on Hermitian b, accumulating the rotations into v.
// On return b is diagonal to rounding.
void jacobi_sweeps(SmallMatrix& b, SmallMatrix& v) {
  const std::size_t n = b.dim();
  const double scale = std::max(b.max_abs(), std::numeric_limits<double>::min());
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_max(b) <= 1e-17 * scale) return;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(b(p, q));
        if (r == 0.0) continue;
        const Complex phase = b(p, q) / r;  // e^{i phi}
        const double alpha = b(p, p).real();
        const double beta = b(q, q).real();
        const double tau = (beta - alpha) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        SmallMatrix g = SmallMatrix::identity(n);
        g(p, p) = c;
        g(p, q) = s;
        g(q, p) = -s * std::conj(phase);
        g(q, q) = c * std::conj(phase);

        b = g.adjoint() * b * g;
        b(p, q) = 0.0;
        b(q, p) = 0.0;
        b(p, p) = b(p, p).real();
        b(q, q) = b(q, q).real();
        v = v * g;
      }
    }
  }
}

HermitianEigen finish(const SmallMatrix& b, const SmallMatrix& v, bool closed_form) {
  const std::size_t n = b.dim();
  std::array<std::size_t, kMaxDim> order{};
  std::iota(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n), 0);
  std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n),
            [&](std::size_t x, std::size_t y) { return b(x, x).real() < b(y, y).real(); });
  HermitianEigen out;
  out.vectors = SmallMatrix(n);
  out.closed_form = closed_form;
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = b(order[k], order[k]).real();
    out.vectors.set_column(k, v.column(order[k]));
  }
  return out;
}

// Plain (bilinear) cross product; orthogonal to both rows in the sense
// sum_j row_j * x_j = 0, which is what a null vector of H - lambda I needs.
SmallVector cross(const SmallVector& a, const SmallVector& b) {
  return SmallVector{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

SmallVector null_vector(const SmallMatrix& h, double lambda) {
  SmallMatrix m = h;
  for (std::size_t i = 0; i < 3; ++i) m(i, i) -= lambda;
  SmallVector rows[3];
  for (std::size_t r = 0; r < 3; ++r) {
    rows[r] = SmallVector(3);
    for (std::size_t c = 0; c < 3; ++c) rows[r][c] = m(r, c);
  }
  SmallVector best = cross(rows[0], rows[1]);
  double best_norm = best.squared_norm();
  for (const auto& [i, j] : {std::pair{0, 2}, std::pair{1, 2}}) {
    SmallVector c = cross(rows[i], rows[j]);
    const double cn = c.squared_norm();
    if (cn > best_norm) {
      best = c;
      best_norm = cn;
    }
  }
  return (1.0 / std::sqrt(best_norm)) * best;
}

Complex det3(const SmallMatrix& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

}  // namespace

HermitianEigen eigen_hermitian_jacobi(const SmallMatrix& h) {
  check_hermitian(h);
  SmallMatrix b = h;
  SmallMatrix v = SmallMatrix::identity(h.dim());
  jacobi_sweeps(b, v);
  return finish(b, v, false);
}

HermitianEigen eigen_hermitian(const SmallMatrix& h) {
  check_hermitian(h);
  if (h.dim() != 3) return eigen_hermitian_jacobi(h);

  // Trigonometric solution of the characteristic cubic of K = H - m I.
  const double m = h.trace().real() / 3.0;
  SmallMatrix k = h;
  for (std::size_t i = 0; i < 3; ++i) k(i, i) -= m;
  double p = 0.0;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) p += std::norm(k(r, c));
  p /= 6.0;
  if (p == 0.0) return eigen_hermitian_jacobi(h);

  const double q = det3(k).real() / 2.0;
  const double ratio = std::clamp(q / std::pow(p, 1.5), -1.0, 1.0);
  const double phi = std::acos(ratio) / 3.0;
  const double sp = std::sqrt(p);
  const double l_hi = m + 2.0 * sp * std::cos(phi);
  const double l_lo = m + 2.0 * sp * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  const double l_mid = 3.0 * m - l_hi - l_lo;

  const double scale = std::max({std::abs(l_hi), std::abs(l_lo), std::abs(l_mid)});
  const double gap = std::min(std::abs(l_mid - l_lo), std::abs(l_hi - l_mid));
  if (gap < kDegenerateGap * scale) return eigen_hermitian_jacobi(h);

  SmallMatrix v(3);
  v.set_column(0, null_vector(h, l_lo));
  v.set_column(1, null_vector(h, l_mid));
  v.set_column(2, null_vector(h, l_hi));

  // Modified Gram-Schmidt, then Jacobi polish of V^H H V.
  for (std::size_t c = 0; c < 3; ++c) {
    SmallVector col = v.column(c);
    for (std::size_t prev = 0; prev < c; ++prev) {
      const SmallVector e = v.column(prev);
      col = col - inner(e, col) * e;
    }
    v.set_column(c, (1.0 / std::sqrt(col.squared_norm())) * col);
  }
  SmallMatrix b = v.adjoint() * h * v;
  jacobi_sweeps(b, v);
  return finish(b, v, true);
}

}  // namespace lambdaphase
