#include "invtensor/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace invtensor {

namespace {

std::string show(const Simplex& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s[k];
  os << "}";
  return os.str();
}

bool subset_of(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Wsc::Wsc(int n, std::map<Simplex, std::uint64_t> weights) : n_(n), weights_(std::move(weights)) {
  if (n < 0) throw InvalidInput("vertex count must be positive");
  for (const auto& [s, w] : weights_) {
    (void)w;
    if (s.empty()) throw InvalidInput("empty simplex in weight table");
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] < 0 || s[k] > n) throw InvalidInput("vertex " + std::to_string(s[k]) + " out of range in " + show(s));
      if (k && s[k] <= s[k - 1]) throw InvalidInput("simplex " + show(s) + " is not sorted or has duplicates");
    }
  }
  derive();
}

void Wsc::derive() {
  std::vector<Simplex> nonzero;
  for (const auto& [s, w] : weights_)
    if (w) nonzero.push_back(s);
  for (const auto& s : nonzero) {
    bool maximal = true;
    for (const auto& t : nonzero)
      if (t.size() > s.size() && subset_of(s, t)) {
        maximal = false;
        break;
      }
    if (maximal) {
      facets_.push_back(s);
      facet_weight_.push_back(weights_.at(s));
    }
  }
  incident_.assign(n_ + 1, {});
  for (int f = 0; f < static_cast<int>(facets_.size()); ++f) {
    first_copy_.push_back(static_cast<int>(copies_.size()));
    for (std::uint64_t c = 0; c < facet_weight_[f]; ++c) {
      const int p = static_cast<int>(copies_.size());
      copies_.push_back({facets_[f], static_cast<int>(c)});
      copy_facet_.push_back(f);
      for (int v : facets_[f]) incident_[v].push_back(p);
    }
  }
  slot_.assign(n_ + 1, std::vector<int>(copies_.size(), -1));
  for (int i = 0; i <= n_; ++i)
    for (int k = 0; k < static_cast<int>(incident_[i].size()); ++k) slot_[i][incident_[i][k]] = k;
}

std::uint64_t Wsc::weight(const Simplex& s) const {
  if (s.empty()) return 0;
  auto it = weights_.find(s);
  if (it != weights_.end()) return it->second;
  std::uint64_t g = 0;
  for (const auto& [t, w] : weights_)
    if (w && t.size() > s.size() && subset_of(s, t)) g = std::gcd(g, w);
  return g;
}

int Wsc::facet_index(const Simplex& facet) const {
  auto it = std::lower_bound(facets_.begin(), facets_.end(), facet);
  if (it == facets_.end() || *it != facet) return -1;
  return static_cast<int>(it - facets_.begin());
}

int Wsc::copy_position(const Simplex& facet, int copy) const {
  const int f = facet_index(facet);
  if (f < 0 || copy < 0 || static_cast<std::uint64_t>(copy) >= facet_weight_[f]) return -1;
  return first_copy_[f] + copy;
}

ValidationReport Wsc::validate() const {
  ValidationReport rep;
  for (int i = 0; i <= n_; ++i)
    if (weight({i}) == 0) rep.add("singleton", "vertex " + std::to_string(i) + " has weight 0");
  for (const auto& [s2, w2] : weights_) {
    if (!w2) continue;
    for (const auto& [s1, w1] : weights_) {
      if (s1.size() >= s2.size() || !subset_of(s1, s2)) continue;
      if (w1 == 0)
        rep.add("monotone_support", show(s1) + " has weight 0 inside " + show(s2));
      else if (w2 % w1 != 0)
        rep.add("divisibility", show(s1) + "=" + std::to_string(w1) + " does not divide " + show(s2) + "=" +
                                    std::to_string(w2));
    }
  }
  return rep;
}

ValidationReport validate_wsc(const Wsc& w) { return w.validate(); }

void require_valid(const Wsc& w) {
  auto rep = w.validate();
  if (!rep.ok()) throw PreconditionFailed("invalid complex: " + rep.violations.front().detail);
}

std::vector<Simplex> facets(const Wsc& w) {
  require_valid(w);
  return w.facets();
}

std::vector<FacetCopy> facet_multiset(const Wsc& w) {
  require_valid(w);
  return w.copies();
}

std::vector<FacetCopy> incident(const Wsc& w, int i) {
  require_valid(w);
  if (i < 0 || i > w.n()) throw InvalidInput("vertex " + std::to_string(i) + " out of range");
  std::vector<FacetCopy> out;
  for (int p : w.incident(i)) out.push_back(w.copies()[p]);
  return out;
}

bool is_connected(const Wsc& w) {
  const int m = w.num_vertices();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : w.facets())
    for (std::size_t k = 1; k < f.size(); ++k) parent[find(f[k])] = find(f[0]);
  for (int i = 1; i < m; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

namespace {

std::map<Simplex, std::uint64_t> with_singletons(int n) {
  std::map<Simplex, std::uint64_t> w;
  for (int i = 0; i <= n; ++i) w[{i}] = 1;
  return w;
}

}  // namespace

Wsc simplex_complex(int n) {
  if (n < 0) throw InvalidInput("simplex needs n >= 0");
  auto w = with_singletons(n);
  Simplex all(n + 1);
  std::iota(all.begin(), all.end(), 0);
  w[all] = 1;
  return Wsc(n, std::move(w));
}

Wsc complete_complex(int n) {
  if (n < 1) throw InvalidInput("complete graph needs n >= 1");
  auto w = with_singletons(n);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) w[{i, j}] = 1;
  return Wsc(n, std::move(w));
}

Wsc line_complex(int n) {
  if (n < 1) throw InvalidInput("line needs n >= 1");
  auto w = with_singletons(n);
  for (int i = 0; i < n; ++i) w[{i, i + 1}] = 1;
  return Wsc(n, std::move(w));
}

Wsc circle_complex(int k) {
  if (k < 3) throw InvalidInput("circle needs at least 3 vertices");
  auto w = with_singletons(k - 1);
  for (int i = 0; i < k; ++i) {
    const int j = (i + 1) % k;
    w[{std::min(i, j), std::max(i, j)}] = 1;
  }
  return Wsc(k - 1, std::move(w));
}

Wsc double_edge_complex() {
  auto w = with_singletons(1);
  w[{0, 1}] = 2;
  return Wsc(1, std::move(w));
}

Wsc cayley_complex(const FiniteGroup& g, const std::vector<int>& generators) {
  const int k = g.order();
  if (k < 2) throw InvalidInput("Cayley complex needs a nontrivial group");
  for (int s : generators) {
    if (s <= 0 || s >= k) throw InvalidInput("generator must be a non-identity element");
  }
  if (static_cast<int>(g.generated_by(generators).size()) != k)
    throw InvalidInput("generators do not generate the group");
  std::set<std::pair<int, int>> edges;
  for (int a = 0; a < k; ++a)
    for (int s : generators) edges.insert({a, g.mul(a, s)});
  auto w = with_singletons(k - 1);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const std::uint64_t c = edges.count({a, b}) + edges.count({b, a});
      if (c) w[{a, b}] = c;
    }
  return Wsc(k - 1, std::move(w));
}

Wsc scale_weights(const Wsc& w, std::uint64_t m) {
  if (m == 0) throw InvalidInput("scale factor must be positive");
  auto table = w.stored();
  for (int i = 0; i <= w.n(); ++i) table[{i}] = w.weight({i});
  for (int f = 0; f < static_cast<int>(w.facets().size()); ++f)
    table[w.facets()[f]] = saturating_mul(w.facet_weight(f), m);
  return Wsc(w.n(), std::move(table));
}

Wsc unscale_weights(const Wsc& w, std::uint64_t m) {
  if (m == 0) throw InvalidInput("scale factor must be positive");
  auto table = w.stored();
  for (int f = 0; f < static_cast<int>(w.facets().size()); ++f) {
    if (w.facet_weight(f) % m) throw PreconditionFailed("facet weight not divisible by " + std::to_string(m));
    table[w.facets()[f]] = w.facet_weight(f) / m;
  }
  return Wsc(w.n(), std::move(table));
}

Wsc standard_complex(ComplexFamily family, const ComplexParams& params) {
  switch (family) {
    case ComplexFamily::simplex: return simplex_complex(params.n);
    case ComplexFamily::complete: return complete_complex(params.n);
    case ComplexFamily::line: return line_complex(params.n);
    case ComplexFamily::circle: return circle_complex(params.n);
    case ComplexFamily::double_edge: return double_edge_complex();
    case ComplexFamily::cayley:
      if (!params.group) throw InvalidInput("Cayley complex needs a group");
      return cayley_complex(*params.group, params.generators);
  }
  throw InvalidInput("unknown complex family");
}

}  // namespace invtensor
