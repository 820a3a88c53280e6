#pragma once

#include <array>

#include "lambdaphase/small_matrix.hpp"

namespace lambdaphase {

/// Eigendecomposition H = V diag(values) V^H of a Hermitian matrix of
/// dimension <= 3. Eigenvalues ascend; columns of V are orthonormal.
struct HermitianEigen {
  std::array<double, kMaxDim> values{};
  SmallMatrix vectors;
  /// True when the closed-form cubic path was used (false: Jacobi only).
  bool closed_form = false;
};

/// Relative eigenvalue gap below which the closed-form path is abandoned.
inline constexpr double kDegenerateGap = 1e-9;

/// Throws std::domain_error if the input is not Hermitian to 1e-12 (relative).
HermitianEigen eigen_hermitian(const SmallMatrix& h);

/// Cyclic Jacobi on its own, starting from the identity. Exposed for tests.
HermitianEigen eigen_hermitian_jacobi(const SmallMatrix& h);

/// f(H) = V f(Λ) V^H for a real function of the eigenvalues.
template <class F>
SmallMatrix spectral_function(const HermitianEigen& eig, F&& f) {
  const std::size_t n = eig.vectors.dim();
  SmallMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex fk = f(eig.values[k]);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        out(r, c) += eig.vectors(r, k) * fk * std::conj(eig.vectors(c, k));
  }
  return out;
}

}  // namespace lambdaphase
