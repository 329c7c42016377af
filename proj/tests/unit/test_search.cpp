#include <doctest.h>

#include "invtensor/random.hpp"
#include "invtensor/search.hpp"
#include "suite/oracles.hpp"

using namespace invtensor;

namespace {

GlobalTensor transpose(const GlobalTensor& m) {
  GlobalTensor t({m.dims[1], m.dims[0]});
  for (int a = 0; a < m.dims[0]; ++a)
    for (int b = 0; b < m.dims[1]; ++b) t.entries[t.ravel({b, a})] = m.entries[m.ravel({a, b})];
  return t;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("edge rank matches elimination") {
    Rng rng = make_rng(61);
    for (int rank = 0; rank <= 4; ++rank) {
      GlobalTensor m({4, 5});
      for (int k = 0; k < rank; ++k) {
        const GlobalTensor u = random_tensor({4}, rng), w = random_tensor({5}, rng);
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 5; ++b) m.entries[m.ravel({a, b})] += u.entries[a] * w.entries[b];
      }
      CHECK(exact_edge_rank(m) == rank);
      CHECK(oracle::matrix_rank(m, 1e-9) == rank);
      CHECK(exact_edge_rank(transpose(m)) == rank);
    }
    CHECK_THROWS_AS(exact_edge_rank(GlobalTensor({2, 2, 2})), InvalidInput);
  }

  TEST_CASE("planted decompositions are recovered") {
    Rng rng = make_rng(62);
    const auto a = trivial_action(line_complex(2));
    const Decomposition planted = random_decomposition(a, 2, {2, 2, 2}, rng);
    const GlobalTensor v = contract(planted);
    SearchOptions opts;
    opts.restarts = 16;
    const auto res = numeric_rank_search(a, v, 2, opts);
    REQUIRE(res.decomposition.has_value());
    CHECK(res.decomposition->r == 2);
    CHECK(max_abs_diff(contract(*res.decomposition), v) <= 1e-6);
    CHECK(res.best_residual <= opts.tol);
  }

  TEST_CASE("invariant search keeps condition (b)") {
    Rng rng = make_rng(63);
    const auto a = rotation_circle_action(3);
    const Decomposition planted = random_decomposition(a, 2, {2, 2, 2}, rng);
    const GlobalTensor v = contract(planted);
    const auto res = numeric_rank_search(a, v, 2);
    REQUIRE(res.decomposition.has_value());
    CHECK(check_condition_b(*res.decomposition, 0.0).ok());
    CHECK(max_abs_diff(contract(*res.decomposition), v) <= 1e-6);
  }

  TEST_CASE("the product of dimensions always suffices") {
    Rng rng = make_rng(64);
    const auto a = trivial_action(line_complex(1));
    const GlobalTensor v = random_tensor({2, 2}, rng);
    const auto res = numeric_rank_search(a, v, 4);
    REQUIRE(res.decomposition.has_value());
    CHECK(res.best_restart == 0);
  }

  TEST_CASE("rank one cannot fit a rank two matrix") {
    GlobalTensor m({2, 2}, {1.0, 0.0, 0.0, 1.0});
    SearchOptions opts;
    opts.restarts = 4;
    const auto res = numeric_rank_search(trivial_action(line_complex(1)), m, 1, opts);
    CHECK_FALSE(res.decomposition.has_value());
    CHECK(res.best_residual >= 0.4);
    CHECK(res.restarts_run == 4);
  }

  TEST_CASE("search is reproducible for a fixed seed") {
    Rng rng = make_rng(65);
    const auto a = trivial_action(circle_complex(3));
    const GlobalTensor v = contract(random_decomposition(a, 2, {2, 2, 2}, rng));
    SearchOptions opts;
    opts.restarts = 8;
    const auto r1 = numeric_rank_search(a, v, 2, opts);
    const auto r2 = numeric_rank_search(a, v, 2, opts);
    CHECK(r1.best_residual == r2.best_residual);
    CHECK(r1.best_restart == r2.best_restart);
  }

  TEST_CASE("indicator search") {
    SearchOptions opts;
    opts.restarts = 16;
    const auto two = indicator_search(1, 2, opts);
    REQUIRE(two.coefficients.has_value());
    CHECK(oracle::indicator_residual(*two.coefficients) <= kIndicatorSuccess);
    const auto one = indicator_search(1, 1, opts);
    CHECK_FALSE(one.coefficients.has_value());
    CHECK(one.best_residual > 0.1);
  }
}
