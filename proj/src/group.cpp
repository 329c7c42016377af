#include "invtensor/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace invtensor {

namespace {

bool is_perm(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Simplex image(const Perm& v, const Simplex& s) {
  Simplex out;
  out.reserve(s.size());
  for (int x : s) out.push_back(v[x]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

WscAction::WscAction(FiniteGroup g, Wsc w, std::vector<Perm> vertex, std::vector<Perm> copy)
    : group(std::move(g)), complex(std::move(w)), vertex_act(std::move(vertex)), copy_act(std::move(copy)) {
  const auto k = static_cast<std::size_t>(group.order());
  if (vertex_act.size() != k || copy_act.size() != k)
    throw InvalidInput("action tables must have one row per group element");
  for (const auto& p : vertex_act)
    if (p.size() != static_cast<std::size_t>(complex.num_vertices()))
      throw InvalidInput("vertex permutation has wrong length");
  for (const auto& p : copy_act)
    if (p.size() != static_cast<std::size_t>(complex.num_copies()))
      throw InvalidInput("copy permutation has wrong length");
  for (const auto& p : vertex_act)
    for (int x : p)
      if (x < 0 || x >= complex.num_vertices()) throw InvalidInput("vertex image out of range");
  for (const auto& p : copy_act)
    for (int x : p)
      if (x < 0 || x >= complex.num_copies()) throw InvalidInput("copy image out of range");
}

ValidationReport validate_action(const WscAction& a) {
  ValidationReport rep;
  const auto& w = a.complex;
  const int k = a.order();
  for (int g = 0; g < k; ++g) {
    if (!is_perm(a.vertex_act[g])) rep.add("permutation", "vertex map of " + std::to_string(g) + " is not a bijection");
    if (!is_perm(a.copy_act[g])) rep.add("permutation", "copy map of " + std::to_string(g) + " is not a bijection");
  }
  if (!rep.ok()) return rep;
  for (int i = 0; i < w.num_vertices(); ++i)
    if (a.vertex(0, i) != i) rep.add("homomorphism", "identity moves vertex " + std::to_string(i));
  for (int p = 0; p < w.num_copies(); ++p)
    if (a.copy(0, p) != p) rep.add("homomorphism", "identity moves copy " + std::to_string(p));
  for (int g = 0; g < k; ++g)
    for (int h = 0; h < k; ++h) {
      const int gh = a.group.mul(g, h);
      for (int i = 0; i < w.num_vertices(); ++i)
        if (a.vertex(g, a.vertex(h, i)) != a.vertex(gh, i)) {
          rep.add("homomorphism", "vertex action of " + std::to_string(g) + "*" + std::to_string(h));
          break;
        }
      for (int p = 0; p < w.num_copies(); ++p)
        if (a.copy(g, a.copy(h, p)) != a.copy(gh, p)) {
          rep.add("homomorphism", "copy action of " + std::to_string(g) + "*" + std::to_string(h));
          break;
        }
    }
  for (int g = 0; g < k; ++g) {
    for (const auto& [s, wt] : w.stored())
      if (w.weight(image(a.vertex_act[g], s)) != wt)
        rep.add("weight", "element " + std::to_string(g) + " changes a weight");
    for (int i = 0; i < w.num_vertices(); ++i)
      if (w.weight({a.vertex(g, i)}) != w.weight({i}))
        rep.add("weight", "element " + std::to_string(g) + " changes the weight of vertex " + std::to_string(i));
    for (int p = 0; p < w.num_copies(); ++p) {
      const Simplex target = image(a.vertex_act[g], w.copies()[p].facet);
      if (w.copies()[a.copy(g, p)].facet != target)
        rep.add("collapse", "element " + std::to_string(g) + " sends copy " + std::to_string(p) +
                                " off the image of its facet");
    }
  }
  return rep;
}

void require_valid(const WscAction& a) {
  auto rep = validate_action(a);
  if (!rep.ok()) throw PreconditionFailed("invalid action: " + rep.violations.front().detail);
}

bool is_free(const WscAction& a) {
  for (int g = 1; g < a.order(); ++g)
    for (int p = 0; p < a.complex.num_copies(); ++p)
      if (a.copy(g, p) == p) return false;
  return true;
}

namespace {

// Number of tuples (b_0..b_n) drawn from the per-vertex behaviour lists whose
// vertex images are pairwise distinct, stopping once `cap` is exceeded.
std::uint64_t count_covering(const std::vector<std::vector<std::pair<int, int>>>& behaviours, std::uint64_t cap) {
  const int m = static_cast<int>(behaviours.size());
  std::vector<char> used(m, 0);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int i) -> void {
    if (count > cap) return;
    if (i == m) {
      ++count;
      return;
    }
    for (const auto& [target, id] : behaviours[i]) {
      (void)id;
      if (used[target]) continue;
      used[target] = 1;
      self(self, i + 1);
      used[target] = 0;
    }
  };
  rec(rec, 0);
  return count;
}

// Compares realized and covering tuples of local behaviours; `with_copies`
// includes the copy action on incident copies in the behaviour.
bool blending_test(const WscAction& a, bool with_copies) {
  const auto& w = a.complex;
  const int m = w.num_vertices();
  std::vector<std::vector<std::pair<int, int>>> behaviours(m);
  std::vector<std::map<std::vector<int>, int>> ids(m);
  std::set<std::vector<int>> realized;
  for (int g = 0; g < a.order(); ++g) {
    std::vector<int> global;
    for (int i = 0; i < m; ++i) {
      std::vector<int> key{a.vertex(g, i)};
      if (with_copies)
        for (int p : w.incident(i)) key.push_back(a.copy(g, p));
      auto [it, inserted] = ids[i].emplace(key, static_cast<int>(ids[i].size()));
      if (inserted) behaviours[i].push_back({key[0], it->second});
      global.push_back(it->second);
    }
    realized.insert(global);
  }
  return count_covering(behaviours, realized.size()) == realized.size();
}

}  // namespace

bool is_blending(const WscAction& a) { return blending_test(a, false); }

bool is_strongly_blending(const WscAction& a) { return blending_test(a, true); }

ZMap z_map(const WscAction& a) {
  const int nc = a.complex.num_copies();
  for (int g = 1; g < a.order(); ++g)
    for (int p = 0; p < nc; ++p)
      if (a.copy(g, p) == p)
        throw PreconditionFailed("action is not free: element " + std::to_string(g) + " fixes copy " +
                                 std::to_string(p));
  ZMap z;
  z.values.assign(nc, -1);
  for (int p = 0; p < nc; ++p) {
    if (z.values[p] >= 0) continue;
    for (int g = 0; g < a.order(); ++g) z.values[a.copy(g, p)] = g;
  }
  return z;
}

WscAction free_refinement(const WscAction& a) {
  const int k = a.order();
  const Wsc& old = a.complex;
  Wsc fresh = scale_weights(old, static_cast<std::uint64_t>(k));
  const int nc = fresh.num_copies();
  auto new_pos = [&](int old_pos, int label) {
    const auto& fc = old.copies()[old_pos];
    return fresh.copy_position(fc.facet, fc.copy * k + label);
  };
  std::vector<Perm> copy(k, Perm(nc));
  for (int g = 0; g < k; ++g)
    for (int p = 0; p < old.num_copies(); ++p)
      for (int h = 0; h < k; ++h) copy[g][new_pos(p, h)] = new_pos(a.copy(g, p), a.group.mul(g, h));
  return WscAction(a.group, std::move(fresh), a.vertex_act, std::move(copy));
}

std::vector<std::vector<int>> orbits(const WscAction& a, OrbitDomain on) {
  const int m = on == OrbitDomain::vertices ? a.complex.num_vertices() : a.complex.num_copies();
  std::vector<char> seen(m, 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < m; ++x) {
    if (seen[x]) continue;
    std::set<int> orb;
    for (int g = 0; g < a.order(); ++g) orb.insert(on == OrbitDomain::vertices ? a.vertex(g, x) : a.copy(g, x));
    for (int y : orb) seen[y] = 1;
    out.emplace_back(orb.begin(), orb.end());
  }
  return out;
}

std::vector<int> vertex_orbit_rep(const WscAction& a) {
  std::vector<int> rep(a.complex.num_vertices());
  for (const auto& o : orbits(a, OrbitDomain::vertices))
    for (int x : o) rep[x] = o.front();
  return rep;
}

std::vector<int> stabilizer(const WscAction& a, int i) {
  std::vector<int> out;
  for (int g = 0; g < a.order(); ++g)
    if (a.vertex(g, i) == i) out.push_back(g);
  return out;
}

WscAction trivial_action(const Wsc& w) {
  Perm v(w.num_vertices()), c(w.num_copies());
  std::iota(v.begin(), v.end(), 0);
  std::iota(c.begin(), c.end(), 0);
  return WscAction(FiniteGroup::trivial(), w, {v}, {c});
}

WscAction induced_action(const FiniteGroup& g, const Wsc& w, const std::vector<Perm>& vertex) {
  if (static_cast<int>(vertex.size()) != g.order()) throw InvalidInput("one vertex permutation per element required");
  std::vector<Perm> copy(g.order(), Perm(w.num_copies()));
  for (int x = 0; x < g.order(); ++x) {
    if (static_cast<int>(vertex[x].size()) != w.num_vertices()) throw InvalidInput("vertex permutation has wrong length");
    for (int p = 0; p < w.num_copies(); ++p) {
      const auto& fc = w.copies()[p];
      const int q = w.copy_position(image(vertex[x], fc.facet), fc.copy);
      if (q < 0) throw InvalidInput("vertex map does not send facets to facets of equal weight");
      copy[x][p] = q;
    }
  }
  return WscAction(g, w, vertex, std::move(copy));
}

WscAction restrict_action(const WscAction& a, const std::vector<int>& subgroup_elements) {
  auto view = subgroup(a.group, subgroup_elements);
  std::vector<Perm> v, c;
  for (int g : view.embedding) {
    v.push_back(a.vertex_act[g]);
    c.push_back(a.copy_act[g]);
  }
  return WscAction(view.group, a.complex, std::move(v), std::move(c));
}

WscAction symmetric_simplex_action(int n) {
  auto g = FiniteGroup::symmetric(n + 1);
  return induced_action(g, simplex_complex(n), g.permutations());
}

WscAction symmetric_complete_action(int n) {
  auto g = FiniteGroup::symmetric(n + 1);
  return induced_action(g, complete_complex(n), g.permutations());
}

WscAction reflection_line_action(int n) {
  Perm id(n + 1), flip(n + 1);
  std::iota(id.begin(), id.end(), 0);
  for (int i = 0; i <= n; ++i) flip[i] = n - i;
  return induced_action(FiniteGroup::cyclic(2), line_complex(n), {id, flip});
}

WscAction rotation_circle_action(int k) {
  std::vector<Perm> v(k, Perm(k));
  for (int g = 0; g < k; ++g)
    for (int i = 0; i < k; ++i) v[g][i] = (i + g) % k;
  return induced_action(FiniteGroup::cyclic(k), circle_complex(k), v);
}

WscAction double_edge_action(bool swap_copies) {
  return WscAction(FiniteGroup::cyclic(2), double_edge_complex(), {{0, 1}, {1, 0}},
                   {{0, 1}, swap_copies ? Perm{1, 0} : Perm{0, 1}});
}

int cayley_edge_position(const Wsc& w, int a, int b) {
  const Simplex f{std::min(a, b), std::max(a, b)};
  const int idx = w.facet_index(f);
  if (idx < 0) return -1;
  if (w.facet_weight(idx) == 2) return w.copy_position(f, a < b ? 0 : 1);
  return w.copy_position(f, 0);
}

WscAction cayley_action(const FiniteGroup& g, const std::vector<int>& generators) {
  Wsc w = cayley_complex(g, generators);
  const int k = g.order();
  std::vector<std::pair<int, int>> edge_of(w.num_copies(), {-1, -1});
  for (int a = 0; a < k; ++a)
    for (int s : generators) {
      const int b = g.mul(a, s);
      edge_of[cayley_edge_position(w, a, b)] = {a, b};
    }
  std::vector<Perm> v(k, Perm(k)), c(k, Perm(w.num_copies()));
  for (int x = 0; x < k; ++x) {
    for (int a = 0; a < k; ++a) v[x][a] = g.mul(x, a);
    for (int p = 0; p < w.num_copies(); ++p) {
      const auto [a, b] = edge_of[p];
      c[x][p] = cayley_edge_position(w, g.mul(x, a), g.mul(x, b));
    }
  }
  return WscAction(g, std::move(w), std::move(v), std::move(c));
}

}  // namespace invtensor
