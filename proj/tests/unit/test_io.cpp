#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "invtensor/io.hpp"
#include "invtensor/random.hpp"

using namespace invtensor;

TEST_SUITE("io") {
  TEST_CASE("complexes, groups and actions round trip") {
    const Wsc w = circle_complex(4);
    CHECK(wsc_from_json(wsc_to_json(w)) == w);
    const auto g = FiniteGroup::dihedral(3);
    const auto g2 = group_from_json(group_to_json(g));
    CHECK(g2.order() == 6);
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) CHECK(g2.mul(a, b) == g.mul(a, b));
    const auto act = cayley_action(FiniteGroup::cyclic(5), {1, 2});
    const auto back = action_from_json(action_to_json(act));
    CHECK(same_action(back, act));
  }

  TEST_CASE("tensors and decompositions round trip") {
    Rng rng = make_rng(71);
    const GlobalTensor t = random_tensor({2, 3}, rng);
    CHECK(max_abs_diff(tensor_from_json(tensor_to_json(t)), t) == 0.0);
    Decomposition d = random_decomposition(rotation_circle_action(3), 2, {4, 4, 4}, rng);
    d.algebra = SiteAlgebra::matrix;
    d.shapes = square_shapes({2, 2, 2});
    const Decomposition e = decomposition_from_json(decomposition_to_json(d));
    CHECK(e.r == d.r);
    CHECK(e.algebra == d.algebra);
    CHECK(e.shapes == d.shapes);
    CHECK(e.locals == d.locals);
    CHECK(same_action(e.action, d.action));
    const auto c = indicator_coefficients(2);
    const auto c2 = coefficients_from_json(coefficients_to_json(c));
    CHECK(c2.r == c.r);
    CHECK(c2.d == c.d);
  }

  TEST_CASE("psd families round trip") {
    PsdFamily f;
    f.action = trivial_action(line_complex(1));
    f.r = 1;
    f.dims = {2, 2};
    f.e.assign(2, std::vector<Eigen::MatrixXcd>(2, Eigen::MatrixXcd::Identity(1, 1)));
    f.e[1][1](0, 0) = 2.0;
    const PsdFamily g = psd_family_from_json(psd_family_to_json(f));
    CHECK(g.r == 1);
    CHECK(g.e[1][1](0, 0) == cplx(2.0));
  }

  TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(wsc_from_json(Json::parse(R"({"n": 1})")), InvalidInput);
    CHECK_THROWS_AS(wsc_from_json(Json::parse(R"({"n": 1, "weights": [{"set": [0, 5], "w": 1}]})")), InvalidInput);
    CHECK_THROWS_AS(tensor_from_json(Json::parse(R"({"dims": [2], "entries": [[1, 0]]})")), InvalidInput);
    CHECK_THROWS_AS(tensor_from_json(Json::parse(R"({"dims": [1], "entries": ["x"]})")), InvalidInput);
    CHECK_THROWS_AS(group_from_json(Json::parse(R"({"order": 2, "mul": [[0, 1], [1, 1]]})")), InvalidInput);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InvalidInput);
    const std::string path = "io_test_garbage.json";
    {
      std::ofstream out(path);
      out << "{not json";
    }
    CHECK_THROWS_AS(read_json_file(path), InvalidInput);
    std::remove(path.c_str());
  }
}
