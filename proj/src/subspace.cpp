#include "lambdaphase/subspace.hpp"

#include <stdexcept>

namespace lambdaphase {

SubspaceBasis::SubspaceBasis(SubspaceIndex index) : index_(index) {
  if (index.na < 0 || index.nb < 0) throw std::invalid_argument("subspace_basis: excitation numbers must be >= 0");
  for (int level = 1; level <= 3; ++level) {
    const int pa = index.na - kMuOffsets[static_cast<std::size_t>(level - 1)];
    const int pb = index.nb - kNuOffsets[static_cast<std::size_t>(level - 1)];
    if (pa < 0 || pb < 0) continue;
    members_[dim_++] = SubspaceMember{level, pa, pb};
  }
}

std::optional<std::size_t> SubspaceBasis::position_of(int level) const {
  for (std::size_t k = 0; k < dim_; ++k)
    if (members_[k].level == level) return k;
  return std::nullopt;
}

SubspaceBasis subspace_basis(SubspaceIndex index) { return SubspaceBasis(index); }

SubspaceIndex subspace_of(int level, int photons_a, int photons_b) {
  if (level < 1 || level > 3) throw std::out_of_range("subspace_of: level must be 1, 2 or 3");
  const auto k = static_cast<std::size_t>(level - 1);
  return {photons_a + kMuOffsets[k], photons_b + kNuOffsets[k]};
}

}  // namespace lambdaphase
