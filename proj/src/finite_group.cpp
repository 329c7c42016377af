#include "invtensor/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace invtensor {

FiniteGroup FiniteGroup::from_table(GroupTable mul) {
  const int k = static_cast<int>(mul.size());
  if (k == 0) throw InvalidInput("group table is empty");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != k) throw InvalidInput("group table is not square");
    for (int x : row)
      if (x < 0 || x >= k) throw InvalidInput("group table entry out of range");
  }
  for (int a = 0; a < k; ++a) {
    if (mul[0][a] != a || mul[a][0] != a)
      throw InvalidInput("element 0 is not the identity");
  }
  FiniteGroup g;
  g.inv_.assign(k, -1);
  for (int a = 0; a < k; ++a) {
    std::vector<char> seen_row(k, 0), seen_col(k, 0);
    for (int b = 0; b < k; ++b) {
      if (seen_row[mul[a][b]]++) throw InvalidInput("group table row " + std::to_string(a) + " repeats an element");
      if (seen_col[mul[b][a]]++) throw InvalidInput("group table column " + std::to_string(a) + " repeats an element");
      if (mul[a][b] == 0) g.inv_[a] = b;
    }
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw InvalidInput("group table is not associative at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
  g.mul_ = std::move(mul);
  return g;
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int k) {
  if (k < 1) throw InvalidInput("cyclic group order must be positive");
  GroupTable t(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[a][b] = (a + b) % k;
  return from_table(std::move(t));
}

FiniteGroup FiniteGroup::symmetric(int m) {
  if (m < 1) throw InvalidInput("symmetric group degree must be positive");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int k = static_cast<int>(perms.size());
  std::vector<std::pair<std::vector<int>, int>> index;
  for (int a = 0; a < k; ++a) index.emplace_back(perms[a], a);
  std::sort(index.begin(), index.end());
  auto id_of = [&](const std::vector<int>& q) {
    auto it = std::lower_bound(index.begin(), index.end(), std::make_pair(q, -1));
    return it->second;
  };
  GroupTable t(k, std::vector<int>(k));
  std::vector<int> c(m);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      for (int x = 0; x < m; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = id_of(c);
    }
  FiniteGroup g = from_table(std::move(t));
  g.perms_ = std::move(perms);
  return g;
}

FiniteGroup FiniteGroup::dihedral(int k) {
  if (k < 1) throw InvalidInput("dihedral group parameter must be positive");
  const int order = 2 * k;
  GroupTable t(order, std::vector<int>(order));
  // element id = i + k*j  <->  r^i s^j ;  r^a s^b r^c s^d = r^{a + (-1)^b c} s^{b+d}
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      const int a = x % k, b = x / k, c = y % k, d = y / k;
      const int rot = ((a + (b ? -c : c)) % k + k) % k;
      t[x][y] = rot + k * ((b + d) % 2);
    }
  return from_table(std::move(t));
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elements) const {
  std::set<int> h(elements.begin(), elements.end());
  if (h.empty() || !h.count(0)) return false;
  for (int a : h) {
    if (a < 0 || a >= order()) return false;
    if (!h.count(inv(a))) return false;
    for (int b : h)
      if (!h.count(mul(a, b))) return false;
  }
  return true;
}

bool FiniteGroup::is_normal_subgroup(const std::vector<int>& elements) const {
  if (!is_subgroup(elements)) return false;
  std::set<int> h(elements.begin(), elements.end());
  for (int g = 0; g < order(); ++g)
    for (int a : h)
      if (!h.count(mul(mul(g, a), inv(g)))) return false;
  return true;
}

std::vector<int> FiniteGroup::generated_by(const std::vector<int>& gens) const {
  std::set<int> h{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int s : gens) {
        const int b = mul(a, s);
        if (h.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  return {h.begin(), h.end()};
}

Quotient quotient(const FiniteGroup& g, const std::vector<int>& normal_subgroup) {
  if (!g.is_normal_subgroup(normal_subgroup)) throw PreconditionFailed("subgroup is not normal");
  Quotient q;
  q.coset_of.assign(g.order(), -1);
  for (int a = 0; a < g.order(); ++a) {
    if (q.coset_of[a] >= 0) continue;
    for (int h : normal_subgroup) q.coset_of[g.mul(a, h)] = q.count;
    q.representative.push_back(a);
    ++q.count;
  }
  q.mul.assign(q.count, std::vector<int>(q.count));
  for (int x = 0; x < q.count; ++x)
    for (int y = 0; y < q.count; ++y)
      q.mul[x][y] = q.coset_of[g.mul(q.representative[x], q.representative[y])];
  return q;
}

SubgroupView subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
  if (!g.is_subgroup(elements)) throw PreconditionFailed("elements do not form a subgroup");
  std::vector<int> emb(elements.begin(), elements.end());
  std::sort(emb.begin(), emb.end());
  emb.erase(std::unique(emb.begin(), emb.end()), emb.end());
  std::vector<int> local(g.order(), -1);
  for (int k = 0; k < static_cast<int>(emb.size()); ++k) local[emb[k]] = k;
  GroupTable t(emb.size(), std::vector<int>(emb.size()));
  for (std::size_t a = 0; a < emb.size(); ++a)
    for (std::size_t b = 0; b < emb.size(); ++b) t[a][b] = local[g.mul(emb[a], emb[b])];
  return {FiniteGroup::from_table(std::move(t)), std::move(emb)};
}

}  // namespace invtensor
