#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>

namespace lambdaphase {

/// Conserved excitation numbers (N_a, N_b), with
///   N_a = a^H a - S^{11} + 1,  N_b = b^H b - S^{22} + 1.
/// Ordered lexicographically; every reduction over subspaces follows this order.
struct SubspaceIndex {
  int na = 0;
  int nb = 0;

  auto operator<=>(const SubspaceIndex&) const = default;
};

/// Photon offsets per atomic level: n_a = N_a - mu_i, n_b = N_b - nu_i.
inline constexpr std::array<int, 3> kMuOffsets{0, 1, 1};
inline constexpr std::array<int, 3> kNuOffsets{1, 0, 1};

/// One bare state |level; photons_a, photons_b> of a subspace.
struct SubspaceMember {
  int level = 0;
  int photons_a = 0;
  int photons_b = 0;

  auto operator<=>(const SubspaceMember&) const = default;
};

/// Valid bare states of one subspace, ordered by atomic level.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(SubspaceIndex index);

  SubspaceIndex index() const { return index_; }
  std::size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }
  const SubspaceMember& operator[](std::size_t k) const { return members_[k]; }

  /// Position of the member with the given atomic level, if it survives.
  std::optional<std::size_t> position_of(int level) const;

  const SubspaceMember* begin() const { return members_.data(); }
  const SubspaceMember* end() const { return members_.data() + dim_; }

 private:
  SubspaceIndex index_{};
  std::array<SubspaceMember, 3> members_{};
  std::size_t dim_ = 0;
};

/// Members with a negative photon number are dropped; (0,0) gives an empty
/// basis. Throws std::invalid_argument for negative excitation numbers.
SubspaceBasis subspace_basis(SubspaceIndex index);

/// Excitation numbers of a bare state (inverse of the member construction).
SubspaceIndex subspace_of(int level, int photons_a, int photons_b);

}  // namespace lambdaphase
