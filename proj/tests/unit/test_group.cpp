#include <doctest.h>

#include "invtensor/random.hpp"
#include "invtensor/tensor.hpp"
#include "suite/oracles.hpp"

using namespace invtensor;

namespace {

std::vector<WscAction> sample_actions() {
  const auto c5 = FiniteGroup::cyclic(5);
  return {symmetric_simplex_action(2),   symmetric_simplex_action(3),   symmetric_complete_action(2),
          symmetric_complete_action(3),  reflection_line_action(1),     reflection_line_action(2),
          reflection_line_action(3),     reflection_line_action(4),     reflection_line_action(5),
          rotation_circle_action(3),     rotation_circle_action(4),     rotation_circle_action(6),
          double_edge_action(true),      double_edge_action(false),     cayley_action(c5, {1}),
          cayley_action(c5, {1, 2}),     cayley_action(FiniteGroup::cyclic(2), {1}),
          cayley_action(FiniteGroup::symmetric(3), {1, 2}), trivial_action(circle_complex(4))};
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("standard actions are valid") {
    for (const auto& a : sample_actions()) CHECK(validate_action(a).ok());
  }

  TEST_CASE("classification matches brute force") {
    for (const auto& a : sample_actions()) {
      CHECK(is_free(a) == oracle::is_free(a));
      CHECK(is_blending(a) == oracle::is_blending(a));
      CHECK(is_strongly_blending(a) == oracle::is_strongly_blending(a));
    }
  }

  TEST_CASE("classification examples") {
    CHECK(is_blending(symmetric_simplex_action(2)));
    CHECK_FALSE(is_free(symmetric_simplex_action(2)));
    CHECK(is_free(rotation_circle_action(3)));
    CHECK_FALSE(is_blending(rotation_circle_action(3)));
    CHECK(is_free(double_edge_action(true)));
    CHECK_FALSE(is_free(double_edge_action(false)));
    for (int n = 1; n <= 6; ++n) {
      CHECK(is_free(reflection_line_action(n)) == (n % 2 == 0));
      CHECK(is_blending(reflection_line_action(n)) == (n <= 2));
    }
  }

  TEST_CASE("invalid actions are reported") {
    auto a = rotation_circle_action(3);
    std::swap(a.copy_act[1], a.copy_act[2]);
    CHECK_FALSE(validate_action(a).ok());
    auto b = double_edge_action(true);
    b.vertex_act[1] = {0, 0};
    CHECK_FALSE(validate_action(b).ok());
    // vertex map that breaks the collapse map
    auto c = reflection_line_action(2);
    c.copy_act[1] = {0, 1};
    CHECK_FALSE(validate_action(c).ok());
  }

  TEST_CASE("z-map and free refinement") {
    const auto a = rotation_circle_action(4);
    const auto z = z_map(a);
    for (int g = 0; g < a.order(); ++g)
      for (int p = 0; p < a.complex.num_copies(); ++p)
        CHECK(z.values[a.copy(g, p)] == a.group.mul(g, z.values[p]));
    CHECK_THROWS_AS(z_map(reflection_line_action(1)), PreconditionFailed);
    for (const auto& b : sample_actions()) {
      if (b.order() > 6) continue;
      const auto ref = free_refinement(b);
      CHECK(validate_action(ref).ok());
      CHECK(oracle::is_free(ref));
      CHECK(ref.complex.num_copies() == b.order() * b.complex.num_copies());
    }
  }

  TEST_CASE("orbits and stabilizers") {
    const auto a = reflection_line_action(3);
    const auto o = orbits(a, OrbitDomain::vertices);
    CHECK(o == std::vector<std::vector<int>>{{0, 3}, {1, 2}});
    CHECK(vertex_orbit_rep(a) == std::vector<int>{0, 1, 1, 0});
    CHECK(stabilizer(reflection_line_action(2), 1) == std::vector<int>{0, 1});
    CHECK(stabilizer(a, 1) == std::vector<int>{0});
  }

  TEST_CASE("restriction to a subgroup") {
    const auto a = rotation_circle_action(6);
    const auto h = restrict_action(a, {0, 2, 4});
    CHECK(h.order() == 3);
    CHECK(validate_action(h).ok());
    CHECK(h.vertex(1, 0) == 2);
  }

  TEST_CASE("the action on tensors is a left action") {
    Rng rng = make_rng(3);
    for (const auto& a : {symmetric_simplex_action(2), rotation_circle_action(4), reflection_line_action(3)}) {
      const GlobalTensor v = random_tensor(std::vector<int>(a.complex.num_vertices(), 2), rng);
      for (int g = 0; g < a.order(); ++g)
        for (int h = 0; h < a.order(); ++h)
          CHECK(max_abs_diff(act(a, g, act(a, h, v)), act(a, a.group.mul(g, h), v)) == 0.0);
    }
  }
}
