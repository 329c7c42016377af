#include <doctest.h>

#include "invtensor/finite_group.hpp"

using namespace invtensor;

TEST_SUITE("finite_group") {
  TEST_CASE("cyclic and dihedral tables") {
    const auto c6 = FiniteGroup::cyclic(6);
    CHECK(c6.order() == 6);
    CHECK(c6.mul(4, 5) == 3);
    CHECK(c6.inv(2) == 4);
    const auto d4 = FiniteGroup::dihedral(4);
    CHECK(d4.order() == 8);
    // s r s = r^-1
    const int r = 1, s = 4;
    CHECK(d4.mul(d4.mul(s, r), s) == d4.inv(r));
  }

  TEST_CASE("symmetric group composes permutations") {
    const auto s3 = FiniteGroup::symmetric(3);
    REQUIRE(s3.order() == 6);
    const auto& p = s3.permutations();
    CHECK(p[0] == std::vector<int>{0, 1, 2});
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        for (int x = 0; x < 3; ++x) CHECK(p[s3.mul(a, b)][x] == p[a][p[b][x]]);
  }

  TEST_CASE("table validation") {
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), InvalidInput);
    CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), InvalidInput);
    CHECK_THROWS_AS(FiniteGroup::from_table({}), InvalidInput);
    // Latin square that is not associative
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                             {1, 0, 3, 4, 2},
                                             {2, 4, 0, 1, 3},
                                             {3, 2, 4, 0, 1},
                                             {4, 3, 1, 2, 0}}),
                    InvalidInput);
  }

  TEST_CASE("subgroups and quotients") {
    const auto c6 = FiniteGroup::cyclic(6);
    CHECK(c6.is_subgroup({0, 2, 4}));
    CHECK_FALSE(c6.is_subgroup({0, 1}));
    CHECK(c6.is_normal_subgroup({0, 3}));
    const auto q = quotient(c6, {0, 2, 4});
    CHECK(q.count == 2);
    CHECK(q.coset_of[3] == 1);
    CHECK(q.representative == std::vector<int>{0, 1});
    CHECK(q.mul[1][1] == 0);
    const auto s3 = FiniteGroup::symmetric(3);
    // a transposition generates a non-normal subgroup
    std::vector<int> t;
    for (int a = 0; a < 6; ++a)
      if (s3.permutations()[a] == std::vector<int>{1, 0, 2}) t = {0, a};
    CHECK(s3.is_subgroup(t));
    CHECK_FALSE(s3.is_normal_subgroup(t));
    CHECK(c6.generated_by({2}) == std::vector<int>{0, 2, 4});
    const auto view = subgroup(c6, {0, 2, 4});
    CHECK(view.group.order() == 3);
    CHECK(view.embedding[0] == 0);
  }
}
