#include <doctest.h>

#include "invtensor/kernels.hpp"
#include "invtensor/random.hpp"
#include "suite/oracles.hpp"

using namespace invtensor;

TEST_SUITE("kernels") {
  TEST_CASE("serial, parallel and brute force agree") {
    Rng rng = make_rng(21);
    const std::vector<WscAction> actions = {trivial_action(line_complex(2)), symmetric_simplex_action(2),
                                            rotation_circle_action(4),       reflection_line_action(3),
                                            double_edge_action(true),        cayley_action(FiniteGroup::cyclic(5), {1, 2})};
    for (const auto& a : actions)
      for (int r = 1; r <= 3; ++r) {
        const std::vector<int> dims(a.complex.num_vertices(), 2);
        const Decomposition d = random_decomposition(a, r, dims, rng);
        const GlobalTensor ref = oracle::contract(d);
        const GlobalTensor s = contract_serial(d);
        const GlobalTensor p = contract_parallel(d);
        const double scale = std::max(1.0, max_abs(ref));
        CHECK(max_abs_diff(s, ref) <= 1e-12 * scale);
        CHECK(max_abs_diff(p, ref) <= 1e-12 * scale);
        CHECK(max_abs_diff(contract(d), p) == 0.0);
      }
  }

  TEST_CASE("zero locals are pruned without changing the result") {
    Rng rng = make_rng(22);
    const auto a = trivial_action(circle_complex(5));
    Decomposition d = random_decomposition(a, 3, std::vector<int>(5, 2), rng);
    for (int i = 0; i < d.sites(); ++i)
      for (std::uint64_t b = 0; b < d.table_size(i); b += 2)
        for (int c = 0; c < d.dims[i]; ++c) d.local(i, b)[c] = 0.0;
    const GlobalTensor ref = oracle::contract(d);
    CHECK(max_abs_diff(contract_parallel(d), ref) <= 1e-12 * std::max(1.0, max_abs(ref)));
  }

  TEST_CASE("budgets") {
    Rng rng = make_rng(23);
    const Decomposition d = random_decomposition(trivial_action(circle_complex(6)), 3, std::vector<int>(6, 2), rng);
    CHECK(naive_cost(d) == 729ull * 64ull);
    CHECK_THROWS_AS(contract_serial(d, 1000), BudgetExceeded);
    CHECK_THROWS_AS(contract_parallel(d, 10), BudgetExceeded);
    CHECK_NOTHROW(contract_serial(d));
  }

  TEST_CASE("the parallel kernel is deterministic") {
    Rng rng = make_rng(24);
    const Decomposition d = random_decomposition(rotation_circle_action(6), 2, std::vector<int>(6, 2), rng);
    const GlobalTensor first = contract_parallel(d);
    for (int k = 0; k < 3; ++k) CHECK(max_abs_diff(contract_parallel(d), first) == 0.0);
  }
}
