#include <doctest.h>

#include <random>

#include "invtensor/complex.hpp"
#include "suite/oracles.hpp"

using namespace invtensor;

namespace {

bool has_kind(const ValidationReport& rep, const std::string& kind) {
  for (const auto& v : rep.violations)
    if (v.kind == kind) return true;
  return false;
}

}  // namespace

TEST_SUITE("complex") {
  TEST_CASE("validation examples") {
    CHECK(validate_wsc(double_edge_complex()).ok());
    CHECK(validate_wsc(simplex_complex(2)).ok());
    const Wsc bad(1, {{{0}, 2}, {{1}, 1}, {{0, 1}, 3}});
    const auto rep = validate_wsc(bad);
    CHECK_FALSE(rep.ok());
    CHECK(has_kind(rep, "divisibility"));
    // zero weight inside a supported set
    const Wsc hole(2, {{{0, 1, 2}, 1}, {{0, 1}, 0}});
    CHECK(has_kind(validate_wsc(hole), "monotone_support"));
    CHECK_THROWS_AS(Wsc(1, {{{}, 1}}), InvalidInput);
    CHECK_THROWS_AS(Wsc(1, {{{0, 2}, 1}}), InvalidInput);
    CHECK_THROWS_AS(Wsc(2, {{{1, 0}, 1}}), InvalidInput);
  }

  TEST_CASE("facets of the standard families") {
    CHECK(facets(simplex_complex(3)) == std::vector<Simplex>{{0, 1, 2, 3}});
    CHECK(facets(line_complex(2)) == std::vector<Simplex>{{0, 1}, {1, 2}});
    const auto k3 = facets(complete_complex(3));
    CHECK(k3.size() == 6);
    for (const auto& f : k3) CHECK(f.size() == 2);
    CHECK(circle_complex(4).facets().size() == 4);
  }

  TEST_CASE("facet multisets and incidence") {
    const Wsc delta = double_edge_complex();
    const auto all = facet_multiset(delta);
    REQUIRE(all.size() == 2);
    CHECK(all[0] == FacetCopy{{0, 1}, 0});
    CHECK(all[1] == FacetCopy{{0, 1}, 1});
    CHECK(incident(delta, 0) == all);
    CHECK(incident(delta, 1) == all);
    const auto theta = incident(circle_complex(4), 0);
    REQUIRE(theta.size() == 2);
    CHECK(theta[0].facet == Simplex{0, 1});
    CHECK(theta[1].facet == Simplex{0, 3});
    CHECK(incident(simplex_complex(2), 1).size() == 1);
    CHECK_THROWS(incident(delta, 5));
  }

  TEST_CASE("incidence is the canonical subsequence") {
    const Wsc w(3, {{{0, 1, 2}, 2}, {{2, 3}, 3}, {{0}, 1}, {{1}, 1}, {{2}, 1}, {{3}, 1}});
    REQUIRE(w.valid());
    const auto all = facet_multiset(w);
    CHECK(all.size() == 5);
    for (int i = 0; i <= 3; ++i) {
      std::vector<FacetCopy> expect;
      for (const auto& c : all)
        if (std::find(c.facet.begin(), c.facet.end(), i) != c.facet.end()) expect.push_back(c);
      CHECK(incident(w, i) == expect);
    }
  }

  TEST_CASE("connectivity agrees with the closure oracle") {
    CHECK(is_connected(line_complex(5)));
    CHECK_FALSE(is_connected(Wsc(3, {{{0, 1}, 1}, {{2, 3}, 1}})));
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
      const int n = 1 + static_cast<int>(rng() % 6);
      std::map<Simplex, std::uint64_t> w;
      for (int i = 0; i <= n; ++i) w[{i}] = 1;
      const int edges = static_cast<int>(rng() % (n + 2));
      for (int e = 0; e < edges; ++e) {
        int a = static_cast<int>(rng() % (n + 1)), b = static_cast<int>(rng() % (n + 1));
        if (a == b) continue;
        w[{std::min(a, b), std::max(a, b)}] = 1;
      }
      const Wsc x(n, w);
      CHECK(is_connected(x) == oracle::is_connected(x));
    }
  }

  TEST_CASE("cayley complexes") {
    CHECK(cayley_complex(FiniteGroup::cyclic(2), {1}) == double_edge_complex());
    const auto c5 = FiniteGroup::cyclic(5);
    CHECK(cayley_complex(c5, {1}).stored() == oracle::cayley_weights(c5, {1}));
    CHECK(cayley_complex(c5, {1, 2}).stored() == oracle::cayley_weights(c5, {1, 2}));
    CHECK(cayley_complex(c5, {1, 4}).facet_weight(0) == 2);
    CHECK_THROWS(cayley_complex(c5, {0, 1}));
    // every generating set of every group of order <= 8 gives a connected complex
    std::vector<FiniteGroup> groups;
    for (int k = 1; k <= 8; ++k) groups.push_back(FiniteGroup::cyclic(k));
    groups.push_back(FiniteGroup::symmetric(3));
    groups.push_back(FiniteGroup::dihedral(4));
    for (const auto& g : groups)
      for (int mask = 1; mask < (1 << (g.order() - 1)); ++mask) {
        std::vector<int> gens;
        for (int a = 1; a < g.order(); ++a)
          if (mask >> (a - 1) & 1) gens.push_back(a);
        if (static_cast<int>(g.generated_by(gens).size()) != g.order()) continue;
        const Wsc w = cayley_complex(g, gens);
        CHECK(w.valid());
        CHECK(is_connected(w));
      }
  }

  TEST_CASE("scaling weights") {
    CHECK(scale_weights(line_complex(1), 2) == double_edge_complex());
    CHECK(scale_weights(circle_complex(3), 1) == circle_complex(3));
    const Wsc t = scale_weights(circle_complex(3), 3);
    for (int f = 0; f < 3; ++f) CHECK(t.facet_weight(f) == 3);
    CHECK(t.weight({0}) == 1);
    CHECK(unscale_weights(t, 3) == circle_complex(3));
    CHECK_THROWS(scale_weights(line_complex(1), 0));
    CHECK_THROWS(circle_complex(2));
  }
}
