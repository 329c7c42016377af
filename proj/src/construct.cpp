#include "invtensor/construct.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <stdexcept>

namespace invtensor {

namespace {

double tensor_tol(const GlobalTensor& v, double tol) { return tol * std::max(1.0, max_abs(v)); }

void require_invariant(const WscAction& a, const GlobalTensor& v, double tol) {
  const double dev = invariance_deviation(a, v);
  if (dev > tensor_tol(v, tol))
    throw PreconditionFailed("tensor is not invariant (deviation " + std::to_string(dev) + ")");
}

void require_connected(const Wsc& w) {
  if (!is_connected(w)) throw PreconditionFailed("complex is not connected");
}

// Enumerates nondecreasing tuples of length len over 0..m-1.
template <class F>
void for_each_multiset(int m, int len, F&& f) {
  std::vector<int> t(len, 0);
  while (true) {
    f(t);
    int k = len - 1;
    while (k >= 0 && t[k] == m - 1) --k;
    if (k < 0) return;
    ++t[k];
    for (int q = k + 1; q < len; ++q) t[q] = t[k];
  }
}

}  // namespace

double indicator_residual(const IndicatorCoefficients& c) {
  const int m = c.n + 1;
  double worst = 0.0;
  for_each_multiset(m, m, [&](const std::vector<int>& t) {
    cplx s = 0.0;
    for (int l = 0; l < c.r; ++l) {
      cplx p = 1.0;
      for (int x : t) p *= c.d[x][l];
      s += p;
    }
    bool covering = true;
    for (int k = 0; k < m; ++k) covering = covering && t[k] == k;
    worst = std::max(worst, std::abs(s - cplx(covering ? 1.0 : 0.0)));
  });
  return worst;
}

IndicatorCoefficients indicator_coefficients(int n) {
  if (n < 1) throw InvalidInput("indicator coefficients need n >= 1");
  if (n > 20) throw BudgetExceeded("indicator coefficients limited to n <= 20");
  const int m = n + 1;
  IndicatorCoefficients c;
  c.n = n;
  c.r = (1 << m) - 1;
  c.d.assign(m, std::vector<cplx>(c.r, cplx(0.0)));
  const cplx odd = std::polar(1.0, std::numbers::pi / m);
  for (int mask = 1; mask < (1 << m); ++mask) {
    const int size = __builtin_popcount(static_cast<unsigned>(mask));
    const cplx lambda = (m - size) % 2 ? odd : cplx(1.0);
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) c.d[i][mask - 1] = lambda;
  }
  if (indicator_residual(c) > 1e-10) throw std::logic_error("indicator coefficients failed their residual check");
  return c;
}

double covering_tuple_count(const WscAction& a) {
  double c = 1.0;
  for (const auto& orbit : orbits(a, OrbitDomain::vertices)) {
    for (std::size_t k = 2; k <= orbit.size(); ++k) c *= static_cast<double>(k);
    for (int i : orbit) c *= static_cast<double>(stabilizer(a, i).size());
  }
  return c;
}

namespace {

struct Lift {
  ZMap z;
  Quotient q;
};

Lift prepare_lift(const WscAction& a, const std::vector<int>& h) {
  require_valid(a);
  require_connected(a.complex);
  Lift l;
  l.z = z_map(a);
  l.q = quotient(a.group, h);
  return l;
}

}  // namespace

std::uint64_t count_valid_labelings(const WscAction& a, const std::vector<int>& subgroup_elements,
                                    std::uint64_t budget) {
  const Lift l = prepare_lift(a, subgroup_elements);
  const Wsc& w = a.complex;
  const int nc = w.num_copies();
  const std::uint64_t total = saturating_pow(static_cast<std::uint64_t>(l.q.count), nc);
  if (total > budget) throw BudgetExceeded("too many labelings to enumerate");
  std::vector<int> lab(nc, 0);
  std::uint64_t count = 0;
  for (std::uint64_t t = 0; t < total; ++t) {
    bool ok = true;
    for (int i = 0; i < w.num_vertices() && ok; ++i) {
      bool found = false;
      for (int g = 0; g < a.order() && !found; ++g) {
        bool match = true;
        for (int p : w.incident(i))
          if (l.q.coset_of[a.group.mul(g, l.z.values[p])] != lab[p]) {
            match = false;
            break;
          }
        found = match;
      }
      ok = found;
    }
    if (ok) ++count;
    for (int p = nc - 1; p >= 0; --p) {
      if (++lab[p] < l.q.count) break;
      lab[p] = 0;
    }
  }
  return count;
}

Decomposition change_group(const WscAction& a, const std::vector<int>& subgroup_elements, const Decomposition& d_h,
                           const RunOptions& opts) {
  const Lift l = prepare_lift(a, subgroup_elements);
  check_shape(d_h);
  const WscAction restricted = restrict_action(a, subgroup_elements);
  if (!same_action(restricted, d_h.action))
    throw PreconditionFailed("decomposition does not carry the restricted subgroup action");
  if (!check_condition_b(d_h, opts.tol).ok())
    throw PreconditionFailed("decomposition violates the invariance condition for the subgroup");
  require_invariant(a, contract(d_h, opts), opts.tol);

  const int qn = l.q.count;
  const int r_in = d_h.r;
  const Wsc& w = a.complex;
  auto compute = [&](int i, const std::vector<int>& digits, cplx* out) {
    const auto& inc = w.incident(i);
    const int k = static_cast<int>(inc.size());
    std::vector<int> p1(k);
    for (int s = 0; s < k; ++s) p1[s] = digits[s] / qn;
    for (int g = 0; g < a.order(); ++g) {
      bool match = true;
      for (int s = 0; s < k && match; ++s)
        match = l.q.coset_of[a.group.mul(g, l.z.values[inc[s]])] == digits[s] % qn;
      if (!match) continue;
      const int j = a.vertex(g, i);
      const auto moved = transport_digits(a, g, i, p1);
      std::copy_n(d_h.local(j, encode_beta(moved, r_in)), d_h.dims[j], out);
      return;
    }
    std::fill_n(out, d_h.dims[i], cplx(0.0));
  };
  Decomposition d = materialize_invariant(a, r_in * qn, d_h.dims, compute);
  d.algebra = d_h.algebra;
  d.shapes = d_h.shapes;
  d.separable = d_h.separable;
  rescale_positive(d, 1.0 / qn);

  const std::uint64_t states = saturating_pow(static_cast<std::uint64_t>(qn), w.num_copies());
  if (states <= 1'000'000 && count_valid_labelings(a, subgroup_elements) != static_cast<std::uint64_t>(qn))
    throw std::logic_error("valid labeling count differs from the quotient order");
  return d;
}

Decomposition invariantize_free(const WscAction& a, const Decomposition& d, const RunOptions& opts) {
  if (d.action.order() != 1) throw PreconditionFailed("input decomposition must use the trivial action");
  if (!(d.complex() == a.complex)) throw InvalidInput("decomposition and action live on different complexes");
  Decomposition lifted = d;
  lifted.action = restrict_action(a, {0});
  return change_group(a, {0}, lifted, opts);
}

Decomposition invariantize_blending(const WscAction& a, const ElementarySum& s, const IndicatorCoefficients& c,
                                    const RunOptions& opts) {
  require_valid(a);
  require_connected(a.complex);
  if (!is_blending(a)) throw PreconditionFailed("action is not blending");
  if (c.n != a.complex.n()) throw InvalidInput("indicator coefficients are for a different vertex count");
  check_orbit_dims(a, s.dims);
  require_invariant(a, contract_elementary(s), opts.tol);
  const int terms = static_cast<int>(s.terms.size());
  auto compute = [&](int i, const std::vector<int>& digits, cplx* out) {
    const int di = s.dims[i];
    std::fill_n(out, di, cplx(0.0));
    if (digits.empty() || std::any_of(digits.begin(), digits.end(), [&](int x) { return x != digits[0]; })) return;
    const int ell = digits[0] / terms;
    const int j = digits[0] % terms;
    for (int g = 0; g < a.order(); ++g) {
      const int gi = a.vertex(g, i);
      const cplx coef = c.d[gi][ell];
      for (int q = 0; q < di; ++q) out[q] += coef * s.terms[j][gi][q];
    }
  };
  Decomposition d = materialize_invariant(a, c.r * terms, s.dims, compute);
  if (terms > 0) rescale_positive(d, 1.0 / covering_tuple_count(a));
  return d;
}

Decomposition invariantize_blending(const WscAction& a, const GlobalTensor& v, const RunOptions& opts) {
  return invariantize_blending(a, basis_expansion(v), indicator_coefficients(a.complex.n()), opts);
}

Decomposition invariantize_strong_blending(const WscAction& a, const Decomposition& d, const IndicatorCoefficients& c,
                                           const RunOptions& opts) {
  require_valid(a);
  check_shape(d);
  if (d.action.order() != 1) throw PreconditionFailed("input decomposition must use the trivial action");
  if (!(d.complex() == a.complex)) throw InvalidInput("decomposition and action live on different complexes");
  if (a.order() == 1) return d;
  require_connected(a.complex);
  if (!is_strongly_blending(a)) throw PreconditionFailed("action is not strongly blending");
  if (c.n != a.complex.n()) throw InvalidInput("indicator coefficients are for a different vertex count");
  require_invariant(a, contract(d, opts), opts.tol);
  const int r_in = d.r;
  auto compute = [&](int i, const std::vector<int>& digits, cplx* out) {
    const int di = d.dims[i];
    std::fill_n(out, di, cplx(0.0));
    const int k = static_cast<int>(digits.size());
    const int ell = k ? digits[0] / r_in : 0;
    std::vector<int> inner(k);
    for (int s = 0; s < k; ++s) {
      if (digits[s] / r_in != ell) return;
      inner[s] = digits[s] % r_in;
    }
    for (int g = 0; g < a.order(); ++g) {
      const int gi = a.vertex(g, i);
      const cplx coef = c.d[gi][ell];
      const cplx* w = d.local(gi, encode_beta(transport_digits(a, g, i, inner), r_in));
      for (int q = 0; q < di; ++q) out[q] += coef * w[q];
    }
  };
  Decomposition out = materialize_invariant(a, c.r * r_in, d.dims, compute);
  if (r_in > 0) rescale_positive(out, 1.0 / covering_tuple_count(a));
  return out;
}

namespace {

// Source assignment index for a target-site assignment, or -1 outside the
// admissible set.
using PullbackFn = std::function<std::int64_t(int site, const std::vector<int>& digits)>;

Decomposition pullback(const Decomposition& src, const Wsc& target, int r_out, const PullbackFn& fn) {
  Decomposition d = zero_decomposition(trivial_action(target), r_out, src.dims);
  d.algebra = src.algebra;
  d.shapes = src.shapes;
  d.separable = src.separable;
  d.purification = src.purification;
  for (int i = 0; i < d.sites(); ++i) {
    const int k = d.arity(i);
    for (std::uint64_t beta = 0; beta < d.table_size(i); ++beta) {
      const std::int64_t b = fn(i, decode_beta(beta, r_out, k));
      if (b >= 0) std::copy_n(src.local(i, static_cast<std::uint64_t>(b)), src.dims[i], d.local(i, beta));
    }
  }
  return d;
}

void require_trivial(const Decomposition& d) {
  check_shape(d);
  if (d.action.order() != 1) throw PreconditionFailed("change of complex needs the trivial action");
}

int to_int_index(std::uint64_t x) {
  if (x > static_cast<std::uint64_t>(INT32_MAX)) throw BudgetExceeded("index set too large");
  return static_cast<int>(x);
}

}  // namespace

Decomposition change_complex_constant(const Decomposition& d, const Wsc& omega) {
  require_trivial(d);
  const Wsc& psi = d.complex();
  if (omega.n() != psi.n()) throw InvalidInput("complexes have different vertex sets");
  require_connected(omega);
  const int nc = psi.num_copies();
  const int r_out = to_int_index(assignment_count(d.r, nc));
  auto fn = [&](int i, const std::vector<int>& digits) -> std::int64_t {
    if (digits.empty() || std::any_of(digits.begin(), digits.end(), [&](int x) { return x != digits[0]; })) return -1;
    const auto alpha = decode_beta(static_cast<std::uint64_t>(digits[0]), d.r, nc);
    std::vector<int> restricted;
    for (int p : psi.incident(i)) restricted.push_back(alpha[p]);
    return static_cast<std::int64_t>(encode_beta(restricted, d.r));
  };
  return pullback(d, omega, r_out, fn);
}

Decomposition change_complex_power(const Decomposition& d, int m, PowerDirection direction) {
  require_trivial(d);
  if (m < 1) throw InvalidInput("multiplicity must be positive");
  const Wsc& src = d.complex();
  if (direction == PowerDirection::to_multiple) {
    const Wsc target = scale_weights(src, static_cast<std::uint64_t>(m));
    int q = 0;
    while (saturating_pow(static_cast<std::uint64_t>(q), m) < static_cast<std::uint64_t>(d.r)) ++q;
    // slots[i][s][k]: target slot of duplicate k of the s-th source copy at i
    std::vector<std::vector<std::vector<int>>> slots(src.num_vertices());
    for (int i = 0; i < src.num_vertices(); ++i)
      for (int p : src.incident(i)) {
        const auto& fc = src.copies()[p];
        std::vector<int> ks;
        for (int k = 0; k < m; ++k) ks.push_back(target.local_slot(i, target.copy_position(fc.facet, fc.copy * m + k)));
        slots[i].push_back(std::move(ks));
      }
    auto fn = [&](int i, const std::vector<int>& digits) -> std::int64_t {
      std::vector<int> src_digits;
      for (const auto& ks : slots[i]) {
        std::int64_t value = 0;
        for (int k = 0; k < m; ++k) value = value * q + digits[ks[k]];
        if (value >= d.r) return -1;
        src_digits.push_back(static_cast<int>(value));
      }
      return static_cast<std::int64_t>(encode_beta(src_digits, d.r));
    };
    return pullback(d, target, q, fn);
  }
  const Wsc target = unscale_weights(src, static_cast<std::uint64_t>(m));
  const int r_out = to_int_index(assignment_count(d.r, m));
  // sources[i][s][k]: source slot of duplicate k of the s-th target copy at i
  std::vector<std::vector<std::vector<int>>> sources(target.num_vertices());
  for (int i = 0; i < target.num_vertices(); ++i)
    for (int p : target.incident(i)) {
      const auto& fc = target.copies()[p];
      std::vector<int> ks;
      for (int k = 0; k < m; ++k) ks.push_back(src.local_slot(i, src.copy_position(fc.facet, fc.copy * m + k)));
      sources[i].push_back(std::move(ks));
    }
  auto fn = [&](int i, const std::vector<int>& digits) -> std::int64_t {
    std::vector<int> src_digits(src.incident(i).size());
    for (std::size_t s = 0; s < sources[i].size(); ++s) {
      const auto parts = decode_beta(static_cast<std::uint64_t>(digits[s]), d.r, m);
      for (int k = 0; k < m; ++k) src_digits[sources[i][s][k]] = parts[k];
    }
    return static_cast<std::int64_t>(encode_beta(src_digits, d.r));
  };
  return pullback(d, target, r_out, fn);
}

CayleyRouting cayley_routing(const FiniteGroup& g, const std::vector<int>& from_gens, const std::vector<int>& to_gens) {
  const int k = g.order();
  // BFS over the Cayley graph of to_gens and their inverses from the identity.
  std::vector<int> parent(k, -1), via_gen(k, -1), via_sign(k, 0);
  std::vector<char> seen(k, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int sign : {+1, -1})
      for (int s = 0; s < static_cast<int>(to_gens.size()); ++s) {
        const int step = sign > 0 ? to_gens[s] : g.inv(to_gens[s]);
        const int v = g.mul(u, step);
        if (seen[v]) continue;
        seen[v] = 1;
        parent[v] = u;
        via_gen[v] = s;
        via_sign[v] = sign;
        queue.push_back(v);
      }
  }
  CayleyRouting route;
  route.load.assign(to_gens.size(), 0);
  for (int t : from_gens) {
    if (!seen[t]) throw InvalidInput("target generators do not generate the group");
    std::vector<std::pair<int, int>> word;
    for (int v = t; v != 0; v = parent[v]) word.push_back({via_gen[v], via_sign[v]});
    std::reverse(word.begin(), word.end());
    for (const auto& [s, sign] : word) {
      (void)sign;
      ++route.load[s];
    }
    route.words.push_back(std::move(word));
  }
  route.exponent = route.load.empty() ? 0 : *std::max_element(route.load.begin(), route.load.end());
  return route;
}

Decomposition change_complex_cayley(const Decomposition& d, const FiniteGroup& g, const std::vector<int>& from_gens,
                                    const std::vector<int>& to_gens) {
  require_trivial(d);
  const Wsc psi = cayley_complex(g, from_gens);
  if (!(d.complex() == psi)) throw InvalidInput("decomposition does not live on the source Cayley complex");
  const Wsc omega = cayley_complex(g, to_gens);
  const CayleyRouting route = cayley_routing(g, from_gens, to_gens);
  const int big_l = route.exponent;
  const int r_out = to_int_index(assignment_count(d.r, big_l));

  // slot of step k of generator t inside the steps of its type
  std::vector<std::vector<int>> slot(from_gens.size());
  std::vector<int> used(to_gens.size(), 0);
  for (std::size_t t = 0; t < from_gens.size(); ++t)
    for (const auto& [s, sign] : route.words[t]) {
      (void)sign;
      slot[t].push_back(used[s]++);
    }
  // Omega copy used by a step that leaves u along (s, sign)
  auto step_edge = [&](int u, int s, int sign) {
    if (sign > 0) return cayley_edge_position(omega, u, g.mul(u, to_gens[s]));
    const int v = g.mul(u, g.inv(to_gens[s]));
    return cayley_edge_position(omega, v, u);
  };
  auto step_target = [&](int u, int s, int sign) {
    return g.mul(u, sign > 0 ? to_gens[s] : g.inv(to_gens[s]));
  };
  // type of each Omega copy
  std::vector<int> copy_type(omega.num_copies(), -1);
  for (int u = 0; u < g.order(); ++u)
    for (int s = 0; s < static_cast<int>(to_gens.size()); ++s) copy_type[step_edge(u, s, +1)] = s;

  struct Link {
    int slot_a, digit_a, slot_b, digit_b;
  };
  struct SiteRule {
    std::vector<Link> links;                      // pass-through equalities
    std::vector<std::pair<int, int>> zeros;       // (local slot, digit) that must vanish
    std::vector<std::pair<int, int>> source;      // per source slot: (local slot, digit)
  };
  std::vector<SiteRule> rules(g.order());
  for (int i = 0; i < g.order(); ++i) {
    SiteRule& rule = rules[i];
    const auto& inc = omega.incident(i);
    for (std::size_t s = 0; s < inc.size(); ++s)
      for (int x = route.load[copy_type[inc[s]]]; x < big_l; ++x) rule.zeros.push_back({static_cast<int>(s), x});
    rule.source.assign(psi.incident(i).size(), {-1, -1});
    for (std::size_t t = 0; t < from_gens.size(); ++t) {
      const auto& word = route.words[t];
      const int len = static_cast<int>(word.size());
      // start vertex g0 such that the path passes i after `k` steps
      for (int k = 0; k <= len; ++k) {
        int prefix = 0;
        for (int q = 0; q < k; ++q)
          prefix = g.mul(prefix, word[q].second > 0 ? to_gens[word[q].first] : g.inv(to_gens[word[q].first]));
        const int start = g.mul(i, g.inv(prefix));
        std::vector<int> verts{start};
        for (const auto& [s, sign] : word) verts.push_back(step_target(verts.back(), s, sign));
        if (k == 0) {
          const int e = step_edge(verts[0], word[0].first, word[0].second);
          const int src_pos = cayley_edge_position(psi, start, verts[len]);
          rule.source[psi.local_slot(i, src_pos)] = {omega.local_slot(i, e), slot[t][0]};
        } else if (k == len) {
          const int e = step_edge(verts[len - 1], word[len - 1].first, word[len - 1].second);
          const int src_pos = cayley_edge_position(psi, start, verts[len]);
          rule.source[psi.local_slot(i, src_pos)] = {omega.local_slot(i, e), slot[t][len - 1]};
        } else {
          const int e_in = step_edge(verts[k - 1], word[k - 1].first, word[k - 1].second);
          const int e_out = step_edge(verts[k], word[k].first, word[k].second);
          rule.links.push_back(
              {omega.local_slot(i, e_in), slot[t][k - 1], omega.local_slot(i, e_out), slot[t][k]});
        }
      }
    }
    for (const auto& [ls, dg] : rule.source)
      if (ls < 0) throw std::logic_error("Cayley routing left a source copy unassigned");
  }

  auto fn = [&](int i, const std::vector<int>& digits) -> std::int64_t {
    const SiteRule& rule = rules[i];
    std::vector<std::vector<int>> parts;
    parts.reserve(digits.size());
    for (int x : digits) parts.push_back(decode_beta(static_cast<std::uint64_t>(x), d.r, big_l));
    for (const auto& [ls, dg] : rule.zeros)
      if (parts[ls][dg] != 0) return -1;
    for (const auto& l : rule.links)
      if (parts[l.slot_a][l.digit_a] != parts[l.slot_b][l.digit_b]) return -1;
    std::vector<int> src_digits;
    for (const auto& [ls, dg] : rule.source) src_digits.push_back(parts[ls][dg]);
    return static_cast<std::int64_t>(encode_beta(src_digits, d.r));
  };
  return pullback(d, omega, r_out, fn);
}

}  // namespace invtensor
