#include <doctest.h>

#include "invtensor/random.hpp"
#include "suite/oracles.hpp"

using namespace invtensor;

TEST_SUITE("tensor") {
  TEST_CASE("ravel and unravel are inverse") {
    GlobalTensor t({2, 3, 4});
    for (std::size_t f = 0; f < t.size(); ++f) CHECK(t.ravel(t.unravel(f)) == f);
    CHECK(t.ravel({1, 2, 3}) == 23);
    CHECK_THROWS_AS(GlobalTensor({2, 2}, std::vector<cplx>(3)), InvalidInput);
  }

  TEST_CASE("basis expansion reproduces the tensor") {
    Rng rng = make_rng(5);
    const GlobalTensor v = random_tensor({2, 3, 2}, rng);
    const auto s = basis_expansion(v);
    CHECK(s.terms.size() == 12);
    CHECK(max_abs_diff(contract_elementary(s), v) == 0.0);
    GlobalTensor sparse({2, 2});
    sparse.entries[1] = 2.0;
    CHECK(basis_expansion(sparse).terms.size() == 1);
  }

  TEST_CASE("symmetrize gives invariant tensors") {
    Rng rng = make_rng(6);
    for (const auto& a : {symmetric_simplex_action(2), rotation_circle_action(5), reflection_line_action(4)}) {
      const std::vector<int> dims(a.complex.num_vertices(), 2);
      const GlobalTensor v = random_tensor(dims, rng);
      CHECK(oracle::invariance_deviation(a, v) > 1e-3);
      const GlobalTensor s = symmetrize(a, v);
      CHECK(oracle::invariance_deviation(a, s) <= 1e-14);
      CHECK(invariance_deviation(a, s) <= 1e-14);
      CHECK(is_invariant(a, s));
    }
    CHECK_THROWS_AS(check_orbit_dims(rotation_circle_action(3), {2, 3, 2}), InvalidInput);
  }

  TEST_CASE("operator products and adjoints") {
    Rng rng = make_rng(7);
    const std::vector<SiteShape> sa = {{2, 3}, {1, 2}};
    const std::vector<SiteShape> sb = {{3, 2}, {2, 2}};
    const GlobalTensor a = random_tensor({6, 2}, rng);
    const GlobalTensor b = random_tensor({6, 4}, rng);
    const GlobalTensor p = operator_product(a, sa, b, sb);
    CHECK(p.dims == std::vector<int>{4, 2});
    CHECK(max_abs_diff(p, oracle::operator_product(a, sa, b, sb)) <= 1e-13);
    const GlobalTensor h = operator_adjoint(a, sa);
    CHECK(h.dims == std::vector<int>{6, 2});
    CHECK(max_abs_diff(operator_adjoint(h, transpose_shapes(sa)), a) == 0.0);
    // (AB)^* = B^* A^*
    const GlobalTensor lhs = operator_adjoint(p, {{2, 2}, {1, 2}});
    const GlobalTensor rhs = operator_product(operator_adjoint(b, sb), transpose_shapes(sb), h, transpose_shapes(sa));
    CHECK(max_abs_diff(lhs, rhs) <= 1e-13);
  }

  TEST_CASE("hadamard and sums") {
    GlobalTensor a({2}, {1.0, 2.0}), b({2}, {3.0, cplx(0.0, 1.0)});
    CHECK(hadamard(a, b).entries == std::vector<cplx>{3.0, cplx(0.0, 2.0)});
    CHECK((a + b).entries == std::vector<cplx>{4.0, cplx(2.0, 1.0)});
    CHECK((cplx(2.0) * a).entries == std::vector<cplx>{2.0, 4.0});
  }
}
