#include "invtensor/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <vector>

namespace invtensor {

namespace {

struct Plan {
  int m = 0;       // sites
  int n_pos = 0;   // copy positions
  int r = 0;
  std::uint64_t out_size = 1;
  std::vector<std::vector<std::pair<int, std::uint64_t>>> feeds;  // position -> (site, place value)
  std::vector<std::vector<int>> completes;                          // position -> sites finished there
  std::vector<int> free_sites;                                      // sites without incident copies
  std::vector<std::vector<char>> nonzero;                           // site -> beta -> local is nonzero
};

Plan make_plan(const Decomposition& d, bool with_nonzero) {
  check_shape(d);
  Plan p;
  const Wsc& w = d.complex();
  p.m = d.sites();
  p.n_pos = w.num_copies();
  p.r = d.r;
  p.out_size = dims_product(d.dims);
  p.feeds.assign(p.n_pos, {});
  p.completes.assign(p.n_pos, {});
  for (int i = 0; i < p.m; ++i) {
    const auto& inc = w.incident(i);
    const int k = static_cast<int>(inc.size());
    if (k == 0) {
      p.free_sites.push_back(i);
    } else {
      std::uint64_t place = 1;
      for (int s = k - 1; s >= 0; --s) {
        p.feeds[inc[s]].push_back({i, place});
        place *= static_cast<std::uint64_t>(d.r);
      }
      p.completes[inc.back()].push_back(i);
    }
  }
  if (with_nonzero) {
    p.nonzero.resize(p.m);
    for (int i = 0; i < p.m; ++i) {
      const std::uint64_t t = d.table_size(i);
      p.nonzero[i].assign(t, 0);
      for (std::uint64_t b = 0; b < t; ++b) {
        const cplx* v = d.local(i, b);
        for (int c = 0; c < d.dims[i]; ++c)
          if (v[c] != cplx(0.0)) {
            p.nonzero[i][b] = 1;
            break;
          }
      }
    }
  }
  return p;
}

// acc += v_0 (x) v_1 (x) ... (x) v_{m-1}
void add_outer(const Decomposition& d, const std::vector<std::uint64_t>& betas, std::vector<cplx>& scratch,
               std::vector<cplx>& next, std::vector<cplx>& acc) {
  scratch.assign(1, cplx(1.0));
  for (int i = 0; i < d.sites(); ++i) {
    const cplx* v = d.local(i, betas[i]);
    const int di = d.dims[i];
    next.resize(scratch.size() * di);
    std::size_t o = 0;
    for (const auto& x : scratch)
      for (int c = 0; c < di; ++c) next[o++] = x * v[c];
    scratch.swap(next);
  }
  for (std::size_t f = 0; f < acc.size(); ++f) acc[f] += scratch[f];
}

}  // namespace

std::uint64_t naive_cost(const Decomposition& d) {
  return saturating_mul(saturating_pow(static_cast<std::uint64_t>(d.r), d.complex().num_copies()),
                        dims_product(d.dims));
}

GlobalTensor contract_serial(const Decomposition& d, std::uint64_t budget) {
  const Plan p = make_plan(d, false);
  GlobalTensor out(d.dims);
  const std::uint64_t cost = naive_cost(d);
  if (cost > budget)
    throw BudgetExceeded("serial contraction needs " + std::to_string(cost) + " multiply-adds, budget is " +
                         std::to_string(budget));
  if (p.r == 0 && p.n_pos > 0) return out;
  const std::uint64_t total = saturating_pow(static_cast<std::uint64_t>(p.r), p.n_pos);
  std::vector<int> digits(p.n_pos, 0);
  std::vector<std::uint64_t> betas(p.m);
  std::vector<cplx> scratch, next;
  for (std::uint64_t a = 0; a < total; ++a) {
    std::fill(betas.begin(), betas.end(), 0);
    for (int pos = 0; pos < p.n_pos; ++pos)
      for (const auto& [site, place] : p.feeds[pos]) betas[site] += digits[pos] * place;
    add_outer(d, betas, scratch, next, out.entries);
    for (int pos = p.n_pos - 1; pos >= 0; --pos) {
      if (++digits[pos] < p.r) break;
      digits[pos] = 0;
    }
  }
  return out;
}

GlobalTensor contract_parallel(const Decomposition& d, std::uint64_t budget) {
  const Plan p = make_plan(d, true);
  GlobalTensor out(d.dims);
  if (p.r == 0 && p.n_pos > 0) return out;
  for (int i : p.free_sites)
    if (!p.nonzero[i][0]) return out;

  const bool metered = naive_cost(d) > budget;
  int depth = 0;
  std::uint64_t tasks = 1;
  while (depth < p.n_pos && tasks < 64) {
    tasks *= static_cast<std::uint64_t>(p.r);
    ++depth;
  }
  const std::uint64_t leaf_cost = std::max<std::uint64_t>(p.out_size, 1);
  std::atomic<std::uint64_t> spent{0};
  std::atomic<bool> over{false};
  std::vector<std::vector<cplx>> partial(tasks);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(tasks); ++t) {
    if (over.load(std::memory_order_relaxed)) continue;
    std::vector<int> prefix(depth);
    std::uint64_t rest = static_cast<std::uint64_t>(t);
    for (int k = depth - 1; k >= 0; --k) {
      prefix[k] = static_cast<int>(rest % p.r);
      rest /= p.r;
    }
    std::vector<std::uint64_t> betas(p.m, 0);
    std::vector<cplx> scratch, next;
    std::vector<cplx>& acc = partial[t];
    std::uint64_t local_spent = 0;

    auto flush = [&]() {
      if (!metered) return;
      if (spent.fetch_add(local_spent) + local_spent > budget) over = true;
      local_spent = 0;
    };
    auto rec = [&](auto&& self, int pos) -> void {
      if (over.load(std::memory_order_relaxed)) return;
      if (pos == p.n_pos) {
        if (acc.empty()) acc.assign(p.out_size, cplx(0.0));
        add_outer(d, betas, scratch, next, acc);
        local_spent += leaf_cost;
        if (local_spent > (1u << 16)) flush();
        return;
      }
      const int lo = pos < depth ? prefix[pos] : 0;
      const int hi = pos < depth ? prefix[pos] + 1 : p.r;
      for (int v = lo; v < hi; ++v) {
        ++local_spent;
        for (const auto& [site, place] : p.feeds[pos]) betas[site] += v * place;
        bool alive = true;
        for (int site : p.completes[pos])
          if (!p.nonzero[site][betas[site]]) {
            alive = false;
            break;
          }
        if (alive) self(self, pos + 1);
        for (const auto& [site, place] : p.feeds[pos]) betas[site] -= v * place;
      }
    };
    rec(rec, 0);
    flush();
  }

  if (over) throw BudgetExceeded("contraction exceeded the budget of " + std::to_string(budget) + " multiply-adds");
  for (const auto& acc : partial) {
    if (acc.empty()) continue;
    for (std::size_t f = 0; f < acc.size(); ++f) out.entries[f] += acc[f];
  }
  return out;
}

}  // namespace invtensor
