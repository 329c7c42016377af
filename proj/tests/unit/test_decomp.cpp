#include <doctest.h>

#include "invtensor/random.hpp"
#include "suite/oracles.hpp"

using namespace invtensor;

TEST_SUITE("decomp") {
  TEST_CASE("beta encoding") {
    CHECK(encode_beta({1, 0, 2}, 3) == 11);
    CHECK(decode_beta(11, 3, 3) == std::vector<int>{1, 0, 2});
    CHECK(assignment_count(2, 10) == 1024);
    CHECK_THROWS_AS(assignment_count(10, 40), BudgetExceeded);
  }

  TEST_CASE("transport composes like the group") {
    const auto a = symmetric_simplex_action(2);
    const int r = 3;
    const int k = static_cast<int>(a.complex.incident(0).size());
    for (int i = 0; i < 3; ++i)
      for (std::uint64_t beta = 0; beta < assignment_count(r, k); ++beta)
        for (int g = 0; g < a.order(); ++g)
          for (int h = 0; h < a.order(); ++h) {
            const std::uint64_t hb = transport_beta(a, h, i, beta, r);
            CHECK(transport_beta(a, g, a.vertex(h, i), hb, r) == transport_beta(a, a.group.mul(g, h), i, beta, r));
          }
    CHECK(transport_beta(a, 0, 1, 2, r) == 2);
  }

  TEST_CASE("materialized decompositions satisfy condition (b) and give invariant tensors") {
    Rng rng = make_rng(31);
    for (const auto& a : {symmetric_simplex_action(2), reflection_line_action(2), rotation_circle_action(4),
                          double_edge_action(false), cayley_action(FiniteGroup::symmetric(3), {1, 2})}) {
      const Decomposition d = random_decomposition(a, 2, std::vector<int>(a.complex.num_vertices(), 2), rng);
      CHECK(check_condition_b(d).ok());
      CHECK(oracle::invariance_deviation(a, contract(d)) <= 1e-12 * std::max(1.0, max_abs(contract(d))));
    }
  }

  TEST_CASE("condition (b) violations are detected") {
    Rng rng = make_rng(32);
    Decomposition d = random_decomposition(rotation_circle_action(3), 2, {2, 2, 2}, rng);
    d.local(1, 0)[0] += 1.0;
    CHECK_FALSE(check_condition_b(d).ok());
    Decomposition e = d;
    e.locals[0].pop_back();
    CHECK_THROWS_AS(check_shape(e), InvalidInput);
  }

  TEST_CASE("elementary sums become decompositions") {
    Rng rng = make_rng(33);
    const GlobalTensor v = random_tensor({2, 3, 2}, rng);
    const auto s = basis_expansion(v);
    const Decomposition d = from_elementary(line_complex(2), s);
    CHECK(d.r == static_cast<int>(s.terms.size()));
    CHECK(max_abs_diff(oracle::contract(d), v) <= 1e-13);
    CHECK(verify(d, v));
    GlobalTensor w = v;
    w.entries[0] += 1e-3;
    CHECK_FALSE(verify(d, w));
  }

  TEST_CASE("direct sums add and products multiply") {
    Rng rng = make_rng(34);
    const auto a = reflection_line_action(2);
    const std::vector<int> dims(3, 2);
    const Decomposition d1 = random_decomposition(a, 2, dims, rng);
    const Decomposition d2 = random_decomposition(a, 3, dims, rng);
    const Decomposition s = direct_sum(d1, d2);
    CHECK(s.r == 5);
    CHECK(check_condition_b(s).ok());
    const GlobalTensor t1 = oracle::contract(d1), t2 = oracle::contract(d2);
    CHECK(max_abs_diff(contract(s), t1 + t2) <= 1e-12 * (max_abs(t1) + max_abs(t2)));
    Decomposition e1 = d1, e2 = d2;
    e1.algebra = e2.algebra = SiteAlgebra::entrywise;
    const Decomposition p = product(e1, e2);
    CHECK(p.r == 6);
    CHECK(check_condition_b(p).ok());
    const GlobalTensor h = hadamard(t1, t2);
    CHECK(max_abs_diff(contract(p), h) <= 1e-12 * std::max(1.0, max_abs(h)));
  }

  TEST_CASE("matrix products and adjoints") {
    Rng rng = make_rng(35);
    const auto a = trivial_action(line_complex(1));
    Decomposition d1 = random_decomposition(a, 2, {4, 4}, rng);
    Decomposition d2 = random_decomposition(a, 2, {4, 4}, rng);
    const auto shapes = square_shapes({2, 2});
    for (auto* d : {&d1, &d2}) {
      d->algebra = SiteAlgebra::matrix;
      d->shapes = shapes;
    }
    const GlobalTensor t1 = contract(d1), t2 = contract(d2);
    const GlobalTensor expect = oracle::operator_product(t1, shapes, t2, shapes);
    CHECK(max_abs_diff(contract(product(d1, d2)), expect) <= 1e-12 * std::max(1.0, max_abs(expect)));
    CHECK(max_abs_diff(contract(adjoint(d1)), operator_adjoint(t1, shapes)) <= 1e-12 * std::max(1.0, max_abs(t1)));
  }

  TEST_CASE("rescaling keeps condition (b)") {
    Rng rng = make_rng(36);
    Decomposition d = random_decomposition(rotation_circle_action(4), 2, std::vector<int>(4, 2), rng);
    const GlobalTensor before = contract(d);
    rescale_positive(d, 0.25);
    CHECK(check_condition_b(d, 1e-14).ok());
    CHECK(max_abs_diff(contract(d), cplx(0.25) * before) <= 1e-12 * std::max(1.0, max_abs(before)));
  }
}
