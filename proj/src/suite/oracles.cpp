#include "suite/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace invtensor::oracle {

namespace {

bool contains(const Simplex& s, int i) { return std::find(s.begin(), s.end(), i) != s.end(); }

// Copies whose facet contains i, in canonical order.
std::vector<int> touching(const Wsc& w, int i) {
  std::vector<int> out;
  for (int p = 0; p < w.num_copies(); ++p)
    if (contains(w.copies()[p].facet, i)) out.push_back(p);
  return out;
}

bool next_tuple(std::vector<int>& t, int base) {
  for (int k = static_cast<int>(t.size()) - 1; k >= 0; --k) {
    if (++t[k] < base) return true;
    t[k] = 0;
  }
  return false;
}

bool next_tuple(std::vector<int>& t, const std::vector<int>& bases) {
  for (int k = static_cast<int>(t.size()) - 1; k >= 0; --k) {
    if (++t[k] < bases[k]) return true;
    t[k] = 0;
  }
  return false;
}

std::uint64_t restrict_index(const std::vector<int>& alpha, const std::vector<int>& copies, int r) {
  std::uint64_t b = 0;
  for (int p : copies) b = b * r + alpha[p];
  return b;
}

bool blending(const WscAction& a, bool strong) {
  const Wsc& w = a.complex;
  const int m = w.num_vertices();
  std::vector<std::vector<int>> inc(m);
  for (int i = 0; i < m; ++i) inc[i] = touching(w, i);
  std::vector<int> t(m, 0);
  do {
    std::set<int> images;
    for (int i = 0; i < m; ++i) images.insert(a.vertex_act[t[i]][i]);
    if (static_cast<int>(images.size()) != m) continue;
    bool realized = false;
    for (int g = 0; g < a.order() && !realized; ++g) {
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        ok = a.vertex_act[g][i] == a.vertex_act[t[i]][i];
        if (strong)
          for (int p : inc[i]) ok = ok && a.copy_act[g][p] == a.copy_act[t[i]][p];
      }
      realized = ok;
    }
    if (!realized) return false;
  } while (next_tuple(t, a.order()));
  return true;
}

}  // namespace

GlobalTensor contract(const Decomposition& d) {
  const Wsc& w = d.complex();
  const int m = w.num_vertices();
  std::vector<std::vector<int>> inc(m);
  for (int i = 0; i < m; ++i) inc[i] = touching(w, i);
  GlobalTensor out(d.dims);
  std::vector<int> idx(m, 0);
  std::size_t flat = 0;
  do {
    cplx total = 0.0;
    std::vector<int> alpha(w.num_copies(), 0);
    if (d.r > 0 || w.num_copies() == 0) do {
        cplx term = 1.0;
        for (int i = 0; i < m; ++i) term *= d.locals[i][restrict_index(alpha, inc[i], d.r) * d.dims[i] + idx[i]];
        total += term;
      } while (next_tuple(alpha, d.r));
    out.entries[flat++] = total;
  } while (next_tuple(idx, d.dims));
  return out;
}

bool is_free(const WscAction& a) {
  for (int g = 1; g < a.order(); ++g)
    for (int p = 0; p < a.complex.num_copies(); ++p)
      if (a.copy_act[g][p] == p) return false;
  return true;
}

bool is_blending(const WscAction& a) { return blending(a, false); }

bool is_strongly_blending(const WscAction& a) { return blending(a, true); }

bool is_connected(const Wsc& w) {
  const int m = w.num_vertices();
  std::vector<char> seen(m, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (const auto& fc : w.copies())
      if (contains(fc.facet, i))
        for (int j : fc.facet)
          if (!seen[j]) {
            seen[j] = 1;
            stack.push_back(j);
          }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::map<Simplex, std::uint64_t> cayley_weights(const FiniteGroup& g, const std::vector<int>& gens) {
  std::set<std::pair<int, int>> directed;
  for (int a = 0; a < g.order(); ++a)
    for (int s : gens) directed.insert({a, g.mul(a, s)});
  std::map<Simplex, std::uint64_t> out;
  for (int a = 0; a < g.order(); ++a) out[{a}] = 1;
  for (const auto& [a, b] : directed) {
    const Simplex e{std::min(a, b), std::max(a, b)};
    out[e] = static_cast<std::uint64_t>(directed.count({e[0], e[1]}) + directed.count({e[1], e[0]}));
  }
  return out;
}

double indicator_residual(const IndicatorCoefficients& c) {
  const int m = c.n + 1;
  std::vector<int> t(m, 0);
  double worst = 0.0;
  do {
    cplx s = 0.0;
    for (int l = 0; l < c.r; ++l) {
      cplx p = 1.0;
      for (int x : t) p *= c.d[x][l];
      s += p;
    }
    std::vector<int> sorted = t;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 0);
    worst = std::max(worst, std::abs(s - (sorted == all ? 1.0 : 0.0)));
  } while (next_tuple(t, m));
  return worst;
}

double invariance_deviation(const WscAction& a, const GlobalTensor& v) {
  const int m = v.order();
  double worst = 0.0;
  std::vector<int> idx(m, 0);
  std::size_t flat = 0;
  do {
    for (int g = 0; g < a.order(); ++g) {
      std::size_t moved = 0;
      for (int k = 0; k < m; ++k) moved = moved * v.dims[k] + idx[a.vertex_act[g][k]];
      worst = std::max(worst, std::abs(v.entries[flat] - v.entries[moved]));
    }
    ++flat;
  } while (next_tuple(idx, v.dims));
  return worst;
}

GlobalTensor evaluate_psd(const PsdFamily& f) {
  const Wsc& w = f.action.complex;
  const int m = w.num_vertices();
  std::vector<std::vector<int>> inc(m);
  for (int i = 0; i < m; ++i) inc[i] = touching(w, i);
  GlobalTensor out(f.dims);
  std::vector<int> idx(m, 0);
  std::size_t flat = 0;
  do {
    cplx total = 0.0;
    std::vector<int> alpha(w.num_copies(), 0);
    do {
      std::vector<int> beta(w.num_copies(), 0);
      do {
        cplx term = 1.0;
        for (int i = 0; i < m; ++i)
          term *= f.e[i][idx[i]](restrict_index(alpha, inc[i], f.r), restrict_index(beta, inc[i], f.r));
        total += term;
      } while (next_tuple(beta, f.r));
    } while (next_tuple(alpha, f.r));
    out.entries[flat++] = total;
  } while (next_tuple(idx, f.dims));
  return out;
}

GlobalTensor operator_product(const GlobalTensor& a, const std::vector<SiteShape>& sa, const GlobalTensor& b,
                              const std::vector<SiteShape>& sb) {
  const int m = a.order();
  std::vector<int> rows(m), mids(m), cols(m), dims(m);
  for (int i = 0; i < m; ++i) {
    rows[i] = sa[i].rows;
    mids[i] = sa[i].cols;
    cols[i] = sb[i].cols;
    dims[i] = rows[i] * cols[i];
  }
  GlobalTensor out(dims);
  std::vector<int> ro(m, 0);
  do {
    std::vector<int> co(m, 0);
    do {
      cplx total = 0.0;
      std::vector<int> mi(m, 0);
      do {
        std::size_t fa = 0, fb = 0;
        for (int i = 0; i < m; ++i) {
          fa = fa * a.dims[i] + ro[i] * mids[i] + mi[i];
          fb = fb * b.dims[i] + mi[i] * cols[i] + co[i];
        }
        total += a.entries[fa] * b.entries[fb];
      } while (next_tuple(mi, mids));
      std::size_t fo = 0;
      for (int i = 0; i < m; ++i) fo = fo * dims[i] + ro[i] * cols[i] + co[i];
      out.entries[fo] = total;
    } while (next_tuple(co, cols));
  } while (next_tuple(ro, rows));
  return out;
}

bool nonnegative_multiple(const cplx* x, const cplx* u, int n, double tol) {
  double xmax = 0.0, umax = 0.0;
  int k = 0;
  for (int c = 0; c < n; ++c) {
    xmax = std::max(xmax, std::abs(x[c]));
    if (std::abs(u[c]) > umax) {
      umax = std::abs(u[c]);
      k = c;
    }
  }
  if (xmax == 0.0) return true;
  if (umax == 0.0) return false;
  const cplx ratio = x[k] / u[k];
  if (std::abs(ratio.imag()) > tol * std::abs(ratio) || ratio.real() < 0.0) return false;
  for (int c = 0; c < n; ++c)
    if (std::abs(x[c] - ratio.real() * u[c]) > tol * xmax) return false;
  return true;
}

int matrix_rank(const GlobalTensor& m, double tol) {
  int rows = m.dims.at(0), cols = m.dims.at(1);
  std::vector<std::vector<cplx>> a(rows, std::vector<cplx>(cols));
  double top = 0.0;
  for (int p = 0; p < rows; ++p)
    for (int q = 0; q < cols; ++q) {
      a[p][q] = m.entries[p * cols + q];
      top = std::max(top, std::abs(a[p][q]));
    }
  int rank = 0;
  for (int step = 0; step < std::min(rows, cols); ++step) {
    int pr = -1, pc = -1;
    double best = 0.0;
    for (int p = step; p < rows; ++p)
      for (int q = step; q < cols; ++q)
        if (std::abs(a[p][q]) > best) {
          best = std::abs(a[p][q]);
          pr = p;
          pc = q;
        }
    if (pr < 0 || best <= tol * top) break;
    std::swap(a[step], a[pr]);
    for (auto& row : a) std::swap(row[step], row[pc]);
    for (int p = step + 1; p < rows; ++p) {
      const cplx f = a[p][step] / a[step][step];
      for (int q = step; q < cols; ++q) a[p][q] -= f * a[step][q];
    }
    ++rank;
  }
  return rank;
}

}  // namespace invtensor::oracle
