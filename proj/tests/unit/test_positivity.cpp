#include <doctest.h>

#include "invtensor/random.hpp"
#include "suite/oracles.hpp"

using namespace invtensor;

namespace {

double scale(const GlobalTensor& v) { return std::max(1.0, max_abs(v)); }

GlobalTensor identity_operator(const std::vector<int>& sides) {
  int n = 1;
  for (int s : sides) n *= s;
  return matrix_operator(Eigen::MatrixXcd::Identity(n, n), square_shapes(sides));
}

}  // namespace

TEST_SUITE("positivity") {
  TEST_CASE("matrix helpers") {
    Eigen::MatrixXcd m(2, 2);
    m << 2.0, cplx(0.0, 1.0), cplx(0.0, -1.0), 2.0;
    CHECK(is_psd(m));
    CHECK(min_eigenvalue(m) == doctest::Approx(1.0));
    const Eigen::MatrixXcd s = psd_sqrt(m);
    CHECK((s * s - m).cwiseAbs().maxCoeff() <= 1e-12);
    Eigen::MatrixXcd neg = m;
    neg(0, 0) = -1.0;
    CHECK_FALSE(is_psd(neg));
    Rng rng = make_rng(51);
    const auto shapes = std::vector<SiteShape>{{2, 3}, {3, 1}};
    const GlobalTensor t = random_tensor({6, 3}, rng);
    CHECK(max_abs_diff(matrix_operator(operator_matrix(t, shapes), shapes), t) == 0.0);
    CHECK_THROWS_AS(operator_matrix(t, {{2, 2}, {3, 1}}), InvalidInput);
  }

  TEST_CASE("diagonal embedding") {
    Rng rng = make_rng(52);
    const GlobalTensor m = random_nonnegative_tensor({2, 3}, rng);
    const GlobalTensor sigma = diag_embed(m);
    CHECK(sigma.dims == std::vector<int>{4, 9});
    CHECK(sigma.entries[sigma.ravel({3, 4})] == m.entries[m.ravel({1, 1})]);
    CHECK(sigma.entries[sigma.ravel({1, 0})] == 0.0);
    CHECK(max_abs_diff(diag_extract(sigma, {2, 3}), m) == 0.0);
    GlobalTensor off = sigma;
    off.entries[off.ravel({1, 0})] = 1.0;
    CHECK_THROWS_AS(diag_extract(off, {2, 3}), PreconditionFailed);
  }

  TEST_CASE("nonnegative and separable decompositions convert both ways") {
    Rng rng = make_rng(53);
    for (const auto& a : {trivial_action(line_complex(2)), rotation_circle_action(3), reflection_line_action(2)}) {
      const auto dims = std::vector<int>(a.complex.num_vertices(), 2);
      const Decomposition nn = random_decomposition(a, 2, dims, rng, true);
      const GlobalTensor m = contract(nn);
      const Decomposition sep = nn_to_sep(nn);
      CHECK(sep.r == nn.r);
      CHECK(check_separable(sep).ok());
      CHECK(check_condition_b(sep, 0.0).ok());
      CHECK(max_abs_diff(contract(sep), diag_embed(m)) <= 1e-12 * scale(m));
      const Decomposition back = sep_to_nn(sep);
      CHECK(max_abs_diff(contract(back), m) <= 1e-12 * scale(m));
    }
    Decomposition bad = random_decomposition(trivial_action(line_complex(1)), 2, {2, 2}, rng, true);
    bad.local(0, 1)[0] = -0.5;
    CHECK_THROWS_AS(nn_to_sep(bad), PreconditionFailed);
  }

  TEST_CASE("purification of separable decompositions") {
    Rng rng = make_rng(54);
    const auto a = rotation_circle_action(3);
    const Decomposition nn = random_decomposition(a, 2, {2, 2, 2}, rng, true);
    const Decomposition sep = nn_to_sep(nn);
    const Decomposition xi = purify_separable(sep);
    CHECK(xi.r == sep.r);
    CHECK(xi.purification);
    CHECK(check_condition_b(xi, 0.0).ok());
    const GlobalTensor sigma = contract(sep);
    CHECK(max_abs_diff(purification_square(xi), sigma) <= 1e-10 * scale(sigma));
    const auto shapes = xi.shapes;
    const GlobalTensor x = contract(xi);
    const GlobalTensor sq = oracle::operator_product(operator_adjoint(x, shapes), transpose_shapes(shapes), x, shapes);
    CHECK(max_abs_diff(sq, sigma) <= 1e-10 * scale(sigma));
    // stabilizers that permute incident copies are rejected
    const auto b = symmetric_complete_action(2);
    const Decomposition nb = nn_to_sep(random_decomposition(b, 2, {2, 2, 2}, rng, true));
    CHECK_THROWS_AS(purify_separable(nb), PreconditionFailed);
  }

  TEST_CASE("square-root purification") {
    const auto edge = trivial_action(line_complex(1));
    const GlobalTensor id = identity_operator({2, 2});
    const Decomposition xi = sqrt_purification(edge, id, {2, 2});
    CHECK(xi.r == 1);
    CHECK(max_abs_diff(purification_square(xi), id) <= 1e-12);

    Rng rng = make_rng(55);
    for (const auto& a : {rotation_circle_action(3), symmetric_simplex_action(1)}) {
      const std::vector<int> sides(a.complex.num_vertices(), 2);
      const Decomposition sep = nn_to_sep(random_decomposition(a, 2, sides, rng, true));
      const GlobalTensor sigma = contract(sep);
      const Decomposition x = sqrt_purification(a, sigma, sides);
      CHECK(check_condition_b(x, 0.0).ok());
      CHECK(max_abs_diff(purification_square(x), sigma) <= 1e-9 * scale(sigma));
    }
    GlobalTensor neg = id;
    for (auto& e : neg.entries) e = -e;
    CHECK_THROWS_AS(sqrt_purification(edge, neg, {2, 2}), PreconditionFailed);
  }

  TEST_CASE("psd decompositions") {
    Rng rng = make_rng(56);
    for (const auto& a : {trivial_action(line_complex(1)), rotation_circle_action(3)}) {
      const auto dims = std::vector<int>(a.complex.num_vertices(), 2);
      const Decomposition nn = random_decomposition(a, 2, dims, rng, true);
      const GlobalTensor m = contract(nn);
      const PsdFamily fam = purification_to_psd_decomp(purify_separable(nn_to_sep(nn)));
      CHECK(validate_psd_family(fam).ok());
      CHECK(max_abs_diff(evaluate_psd_decomp(fam), m) <= 1e-10 * scale(m));
      CHECK(max_abs_diff(oracle::evaluate_psd(fam), m) <= 1e-10 * scale(m));
      const Decomposition pair = psd_pair_decomposition(fam);
      CHECK(pair.r == fam.r * fam.r);
      CHECK(max_abs_diff(contract(pair), m) <= 1e-10 * scale(m));
      const Decomposition tau = psd_decomp_to_purification(fam);
      CHECK(check_condition_b(tau, 0.0).ok());
      CHECK(max_abs_diff(purification_square(tau), diag_embed(m)) <= 1e-10 * scale(m));
    }
  }

  TEST_CASE("a 3x3 psd factorization") {
    // zero diagonal, 3/4 elsewhere: psd rank 2
    const auto a = trivial_action(line_complex(1));
    PsdFamily f;
    f.action = a;
    f.r = 2;
    f.dims = {3, 3};
    const double c = std::sqrt(3.0) / 2.0;
    const std::vector<std::pair<double, double>> u = {{1.0, 0.0}, {-0.5, c}, {-0.5, -c}};
    const std::vector<std::pair<double, double>> w = {{0.0, 1.0}, {-c, -0.5}, {c, -0.5}};
    f.e.assign(2, {});
    for (int j = 0; j < 3; ++j) {
      Eigen::VectorXcd x(2), y(2);
      x << u[j].first, u[j].second;
      y << w[j].first, w[j].second;
      f.e[0].push_back(x * x.adjoint());
      f.e[1].push_back(y * y.adjoint());
    }
    CHECK(validate_psd_family(f).ok());
    const GlobalTensor m = evaluate_psd_decomp(f);
    const GlobalTensor brute = oracle::evaluate_psd(f);
    CHECK(max_abs_diff(m, brute) <= 1e-12);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(std::abs(m.entries[m.ravel({j, k})] - (j == k ? 0.0 : 0.75)) <= 1e-12);
    const Decomposition tau = psd_decomp_to_purification(f);
    CHECK(max_abs_diff(purification_square(tau), diag_embed(m)) <= 1e-12);
    PsdFamily bad = f;
    bad.e[0][0](0, 0) = -1.0;
    CHECK_FALSE(validate_psd_family(bad).ok());
  }
}
