#include <doctest.h>

#include <algorithm>

#include "invtensor/random.hpp"
#include "suite/oracles.hpp"

using namespace invtensor;

namespace {

double scale(const GlobalTensor& v) { return std::max(1.0, max_abs(v)); }

// Brute-force count of tuples (g_0..g_n) whose images cover the vertex set.
double covering_oracle(const WscAction& a) {
  const int n = a.complex.n();
  const int k = a.order();
  double count = 0.0;
  std::vector<int> g(n + 1, 0);
  while (true) {
    std::vector<char> hit(n + 1, 0);
    for (int i = 0; i <= n; ++i) hit[a.vertex(g[i], i)] = 1;
    if (std::all_of(hit.begin(), hit.end(), [](char x) { return x != 0; })) count += 1.0;
    int p = n;
    while (p >= 0 && ++g[p] == k) g[p--] = 0;
    if (p < 0) break;
  }
  return count;
}

}  // namespace

TEST_SUITE("construct") {
  TEST_CASE("indicator coefficients") {
    for (int n = 1; n <= 4; ++n) {
      const auto c = indicator_coefficients(n);
      CHECK(c.r == (1 << (n + 1)) - 1);
      CHECK(indicator_residual(c) <= 1e-12);
      CHECK(oracle::indicator_residual(c) <= 1e-12);
    }
    auto broken = indicator_coefficients(2);
    broken.d[0][0] += 0.1;
    CHECK(oracle::indicator_residual(broken) >= 0.05);
    CHECK(indicator_residual(broken) == doctest::Approx(oracle::indicator_residual(broken)).epsilon(1e-12));
    CHECK_THROWS_AS(indicator_coefficients(0), InvalidInput);
  }

  TEST_CASE("covering tuple counts") {
    for (const auto& a : {symmetric_simplex_action(2), reflection_line_action(1), reflection_line_action(2),
                          rotation_circle_action(3), symmetric_complete_action(3)})
      CHECK(covering_tuple_count(a) == covering_oracle(a));
    CHECK(covering_tuple_count(symmetric_simplex_action(2)) == 48.0);
  }

  TEST_CASE("free construction") {
    Rng rng = make_rng(41);
    for (const auto& a : {rotation_circle_action(3), rotation_circle_action(4), double_edge_action(true),
                          reflection_line_action(2), cayley_action(FiniteGroup::cyclic(3), {1})}) {
      REQUIRE(is_free(a));
      const auto dims = std::vector<int>(a.complex.num_vertices(), 2);
      const GlobalTensor v = random_invariant_tensor(a, dims, rng);
      const auto s = basis_expansion(v);
      const Decomposition seed = from_elementary(a.complex, s);
      const Decomposition d = invariantize_free(a, seed);
      CHECK(d.r == a.order() * seed.r);
      CHECK(check_condition_b(d, 0.0).ok());
      if (a.complex.num_copies() <= 3) CHECK(max_abs_diff(oracle::contract(d), v) <= 1e-9 * scale(v));
      CHECK(max_abs_diff(contract(d), v) <= 1e-9 * scale(v));
    }
  }

  TEST_CASE("free construction preconditions") {
    Rng rng = make_rng(42);
    const auto a = reflection_line_action(1);
    const GlobalTensor v = random_invariant_tensor(a, {2, 2}, rng);
    CHECK_THROWS_AS(invariantize_free(a, from_elementary(a.complex, basis_expansion(v))), PreconditionFailed);
    const auto b = rotation_circle_action(3);
    const GlobalTensor w = random_tensor({2, 2, 2}, rng);
    CHECK_THROWS_AS(invariantize_free(b, from_elementary(b.complex, basis_expansion(w))), PreconditionFailed);
  }

  TEST_CASE("group change through a normal subgroup") {
    Rng rng = make_rng(43);
    const auto a = rotation_circle_action(6);
    CHECK(count_valid_labelings(a, {0, 2, 4}) == 2);
    CHECK(count_valid_labelings(a, {0, 3}) == 3);
    CHECK(count_valid_labelings(a, {0}) == 6);
    const GlobalTensor v = random_invariant_tensor(a, std::vector<int>(6, 2), rng);
    const auto on_c2 = restrict_action(a, {0, 3});
    const Decomposition d2 = invariantize_free(on_c2, from_elementary(a.complex, basis_expansion(v)));
    const Decomposition up = change_group(a, {0, 3}, d2);
    CHECK(up.r == 3 * d2.r);
    CHECK(check_condition_b(up, 0.0).ok());
    CHECK(max_abs_diff(contract(up), v) <= 1e-9 * scale(v));
    // subgroup that is not normal
    const auto s3 = cayley_action(FiniteGroup::symmetric(3), {1, 2});
    std::vector<int> t;
    for (int g = 1; g < 6; ++g)
      if (s3.group.mul(g, g) == 0 && !s3.group.is_normal_subgroup({0, g})) t = {0, g};
    REQUIRE(t.size() == 2);
    const GlobalTensor w = random_invariant_tensor(s3, std::vector<int>(6, 1), rng);
    const auto on_t = restrict_action(s3, t);
    const Decomposition dt = invariantize_free(on_t, from_elementary(s3.complex, basis_expansion(w)));
    CHECK_THROWS_AS(change_group(s3, t, dt), PreconditionFailed);
  }

  TEST_CASE("blending construction") {
    Rng rng = make_rng(44);
    for (const auto& a : {symmetric_simplex_action(2), reflection_line_action(1), reflection_line_action(2),
                          symmetric_complete_action(2)}) {
      REQUIRE(is_blending(a));
      const GlobalTensor v = random_invariant_tensor(a, std::vector<int>(a.complex.num_vertices(), 2), rng);
      const Decomposition d = invariantize_blending(a, v);
      CHECK(d.r == indicator_coefficients(a.complex.n()).r * static_cast<int>(basis_expansion(v).terms.size()));
      CHECK(check_condition_b(d, 0.0).ok());
      CHECK(max_abs_diff(contract(d), v) <= 1e-9 * scale(v));
    }
    const auto c = rotation_circle_action(3);
    const GlobalTensor v = random_invariant_tensor(c, {2, 2, 2}, rng);
    CHECK_THROWS_AS(invariantize_blending(c, v), PreconditionFailed);
  }

  TEST_CASE("strong blending construction") {
    Rng rng = make_rng(45);
    int tried = 0;
    for (const auto& a : {symmetric_simplex_action(1), symmetric_simplex_action(2), reflection_line_action(1),
                          reflection_line_action(2), symmetric_complete_action(2)}) {
      if (!oracle::is_strongly_blending(a)) continue;
      ++tried;
      const auto dims = std::vector<int>(a.complex.num_vertices(), 2);
      const GlobalTensor v = random_invariant_tensor(a, dims, rng);
      const Decomposition seed = from_elementary(a.complex, basis_expansion(v));
      const auto coeffs = indicator_coefficients(a.complex.n());
      const Decomposition d = invariantize_strong_blending(a, seed, coeffs);
      CHECK(d.r == coeffs.r * seed.r);
      CHECK(check_condition_b(d, 0.0).ok());
      CHECK(max_abs_diff(contract(d), v) <= 1e-9 * scale(v));
    }
    CHECK(tried >= 1);
    const auto triv = trivial_action(line_complex(1));
    const GlobalTensor v = random_tensor({2, 2}, rng);
    const Decomposition seed = from_elementary(triv.complex, basis_expansion(v));
    CHECK(invariantize_strong_blending(triv, seed, indicator_coefficients(1)).r == seed.r);
  }

  TEST_CASE("constant and power changes of complex") {
    Rng rng = make_rng(46);
    const Decomposition d = random_decomposition(trivial_action(line_complex(2)), 2, {2, 2, 2}, rng);
    const GlobalTensor v = contract(d);
    const Decomposition on_circle = change_complex_constant(d, circle_complex(3));
    CHECK(on_circle.r == 2 * 2);
    CHECK(max_abs_diff(oracle::contract(on_circle), v) <= 1e-9 * scale(v));
    CHECK_THROWS_AS(change_complex_constant(d, line_complex(3)), InvalidInput);

    const Decomposition e = random_decomposition(trivial_action(line_complex(1)), 5, {2, 3}, rng);
    const GlobalTensor ve = contract(e);
    const Decomposition up = change_complex_power(e, 3, PowerDirection::to_multiple);
    CHECK(up.r == 2);
    CHECK(up.complex() == scale_weights(line_complex(1), 3));
    CHECK(max_abs_diff(oracle::contract(up), ve) <= 1e-9 * scale(ve));
    const Decomposition down = change_complex_power(up, 3, PowerDirection::from_multiple);
    CHECK(down.r == 8);
    CHECK(max_abs_diff(contract(down), ve) <= 1e-9 * scale(ve));
    CHECK_THROWS_AS(change_complex_power(e, 0, PowerDirection::to_multiple), InvalidInput);
    CHECK_THROWS_AS(change_complex_power(random_decomposition(rotation_circle_action(3), 2, {2, 2, 2}, rng), 2,
                                         PowerDirection::to_multiple),
                    PreconditionFailed);
  }

  TEST_CASE("cayley routing") {
    const auto c5 = FiniteGroup::cyclic(5);
    const auto down = cayley_routing(c5, {1, 2}, {1});
    CHECK(down.exponent == 3);
    CHECK(down.load == std::vector<int>{3});
    CHECK(down.words[1].size() == 2);
    CHECK(cayley_routing(c5, {1}, {1, 2}).exponent == 1);
    CHECK(cayley_routing(c5, {4}, {1}).exponent == 1);
    CHECK(cayley_routing(c5, {4}, {1}).words[0] == std::vector<std::pair<int, int>>{{0, -1}});
    const auto c6 = FiniteGroup::cyclic(6);
    CHECK_THROWS_AS(cayley_routing(c6, {1}, {2}), InvalidInput);
    const auto s3 = FiniteGroup::symmetric(3);
    const auto r = cayley_routing(s3, {1, 2, 3, 4, 5}, {1, 2});
    CHECK(r.words.size() == 5);
    for (std::size_t t = 0; t < r.words.size(); ++t) {
      int x = 0;
      for (const auto& [s, sign] : r.words[t]) x = s3.mul(x, sign > 0 ? (s == 0 ? 1 : 2) : s3.inv(s == 0 ? 1 : 2));
      CHECK(x == static_cast<int>(t) + 1);
    }
  }

  TEST_CASE("cayley change of complex verifies") {
    Rng rng = make_rng(47);
    const auto c4 = FiniteGroup::cyclic(4);
    const auto big = trivial_action(cayley_complex(c4, {1, 2}));
    const Decomposition d = random_decomposition(big, 2, std::vector<int>(4, 2), rng);
    const GlobalTensor v = contract(d);
    const Decomposition out = change_complex_cayley(d, c4, {1, 2}, {1});
    CHECK(out.r == 8);
    CHECK(out.complex() == cayley_complex(c4, {1}));
    CHECK(max_abs_diff(contract(out), v) <= 1e-9 * scale(v));
    CHECK_THROWS_AS(change_complex_cayley(d, c4, {1}, {1, 2}), InvalidInput);
  }
}
