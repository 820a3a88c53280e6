#include <doctest.h>

#include <stdexcept>

#include "lambdaphase/subspace.hpp"

using namespace lambdaphase;

TEST_CASE("generic subspace has three members in level order") {
  const SubspaceBasis b = subspace_basis({3, 2});
  REQUIRE(b.dim() == 3);
  CHECK(b[0] == SubspaceMember{1, 3, 1});
  CHECK(b[1] == SubspaceMember{2, 2, 2});
  CHECK(b[2] == SubspaceMember{3, 2, 1});
}

TEST_CASE("edge subspaces keep only members with non-negative photon numbers") {
  const SubspaceBasis a = subspace_basis({4, 0});
  REQUIRE(a.dim() == 1);
  CHECK(a[0] == SubspaceMember{2, 3, 0});
  CHECK(a.position_of(2) == 0u);
  CHECK_FALSE(a.position_of(1).has_value());

  const SubspaceBasis b = subspace_basis({0, 2});
  REQUIRE(b.dim() == 1);
  CHECK(b[0] == SubspaceMember{1, 0, 1});

  CHECK(subspace_basis({0, 0}).empty());
  CHECK_THROWS_AS(subspace_basis({-1, 0}), std::invalid_argument);
}

TEST_CASE("subspace_of inverts the member construction") {
  for (int na = 0; na <= 4; ++na)
    for (int nb = 0; nb <= 4; ++nb)
      for (const SubspaceMember& m : subspace_basis({na, nb}))
        CHECK(subspace_of(m.level, m.photons_a, m.photons_b) == SubspaceIndex{na, nb});
  // N_a = n_a - S11 + 1 counted by hand.
  CHECK(subspace_of(1, 0, 0) == SubspaceIndex{0, 1});
  CHECK(subspace_of(3, 0, 0) == SubspaceIndex{1, 1});
}

TEST_CASE("every bare state belongs to exactly one subspace") {
  int count = 0;
  for (int na = 0; na <= 6; ++na)
    for (int nb = 0; nb <= 6; ++nb)
      for (const SubspaceMember& m : subspace_basis({na, nb}))
        if (m.photons_a <= 4 && m.photons_b <= 4) ++count;
  CHECK(count == 3 * 5 * 5);
}
