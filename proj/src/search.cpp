#include "invtensor/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include <Eigen/Dense>

namespace invtensor {

int exact_edge_rank(const GlobalTensor& m, double tol) {
  if (m.order() != 2) throw InvalidInput("edge rank needs a tensor with two axes");
  Eigen::MatrixXcd a(m.dims[0], m.dims[1]);
  for (int p = 0; p < m.dims[0]; ++p)
    for (int q = 0; q < m.dims[1]; ++q) a(p, q) = m.entries[p * m.dims[1] + q];
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) > tol * s(0)) ++rank;
  return rank;
}

namespace {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Fills res (and jac when non-null) at params p.
using EvalFn = std::function<void(const Vec& p, Vec& res, Mat* jac)>;

double max_abs(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

// Levenberg-Marquardt for holomorphic residuals. Returns the final max-abs
// residual.
double levenberg_marquardt(Vec& p, const EvalFn& eval, int iters, double stop) {
  Vec res;
  Mat jac;
  eval(p, res, &jac);
  double cost = res.squaredNorm();
  double lambda = 1e-3;
  for (int it = 0; it < iters && max_abs(res) > stop; ++it) {
    const Mat normal = jac.adjoint() * jac;
    const Vec grad = jac.adjoint() * res;
    const double scale = std::max(1e-12, normal.diagonal().real().maxCoeff());
    bool improved = false;
    while (lambda < 1e12) {
      Mat damped = normal;
      damped.diagonal().array() += lambda * scale;
      const Vec step = damped.ldlt().solve(-grad);
      const Vec trial = p + step;
      Vec trial_res;
      eval(trial, trial_res, nullptr);
      const double trial_cost = trial_res.squaredNorm();
      if (std::isfinite(trial_cost) && trial_cost < cost) {
        p = trial;
        lambda = std::max(lambda / 3.0, 1e-15);
        improved = true;
        break;
      }
      lambda *= 4.0;
    }
    if (!improved) break;
    eval(p, res, &jac);
    cost = res.squaredNorm();
  }
  return max_abs(res);
}

Vec random_vector(Eigen::Index size, double scale, std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec v(size);
  for (Eigen::Index k = 0; k < size; ++k) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(k) = cplx(re, im) * (scale / std::sqrt(2.0));
  }
  return v;
}

// Runs restarts in fixed batches so the selected restart does not depend on
// the number of threads.
template <class Attempt>
void run_restarts(int restarts, double success, Attempt&& attempt, int& best, double& best_residual, int& run) {
  constexpr int kBatch = 8;
  best = -1;
  best_residual = 0.0;
  run = 0;
  for (int start = 0; start < restarts; start += kBatch) {
    const int stop = std::min(restarts, start + kBatch);
    std::vector<double> residuals(stop - start);
#pragma omp parallel for schedule(dynamic, 1)
    for (int id = start; id < stop; ++id) residuals[id - start] = attempt(id);
    for (int id = start; id < stop; ++id) {
      const double x = residuals[id - start];
      if (best < 0 || x < best_residual) {
        best = id;
        best_residual = x;
      }
    }
    run = stop;
    if (best >= 0 && best_residual <= success) break;
  }
}

struct Layout {
  std::vector<std::vector<int>> cls;  // [site][beta] -> class
  std::vector<int> rep_site;          // class -> orbit representative
  std::vector<std::uint64_t> rep_beta;
  std::vector<Eigen::Index> offset;   // class -> first parameter
  Eigen::Index size = 0;
};

Layout make_layout(const WscAction& a, int r, const std::vector<int>& dims) {
  Layout l;
  const int m = a.complex.num_vertices();
  l.cls.resize(m);
  for (int i = 0; i < m; ++i)
    l.cls[i].assign(assignment_count(r, static_cast<int>(a.complex.incident(i).size())), -1);
  for (const auto& orbit : orbits(a, OrbitDomain::vertices)) {
    const int i = orbit.front();
    const int k = static_cast<int>(a.complex.incident(i).size());
    const auto stab = stabilizer(a, i);
    std::vector<int> own(l.cls[i].size());
    for (std::uint64_t beta = 0; beta < l.cls[i].size(); ++beta) {
      const auto digits = decode_beta(beta, r, k);
      std::uint64_t canon = beta;
      for (int h : stab) canon = std::min(canon, encode_beta(transport_digits(a, h, i, digits), r));
      if (canon == beta) {
        own[beta] = static_cast<int>(l.rep_site.size());
        l.rep_site.push_back(i);
        l.rep_beta.push_back(beta);
        l.offset.push_back(l.size);
        l.size += dims[i];
      } else {
        own[beta] = own[canon];
      }
    }
    for (int g = 0; g < a.order(); ++g) {
      const int j = a.vertex(g, i);
      for (std::uint64_t beta = 0; beta < own.size(); ++beta) l.cls[j][transport_beta(a, g, i, beta, r)] = own[beta];
    }
  }
  return l;
}

}  // namespace

SearchResult numeric_rank_search(const WscAction& a, const GlobalTensor& v, int r, const SearchOptions& opts) {
  require_valid(a);
  if (r < 1) throw InvalidInput("rank must be positive");
  check_orbit_dims(a, v.dims);
  const Wsc& w = a.complex;
  const int m = w.num_vertices();
  const int nc = w.num_copies();
  const std::uint64_t assignments = assignment_count(r, nc);
  const std::uint64_t outputs = dims_product(v.dims);
  if (saturating_mul(saturating_mul(assignments, outputs), static_cast<std::uint64_t>(m)) > opts.budget)
    throw BudgetExceeded("rank search Jacobian exceeds the budget");
  const Layout layout = make_layout(a, r, v.dims);

  std::vector<std::vector<int>> out_idx(outputs);
  for (std::uint64_t f = 0; f < outputs; ++f) out_idx[f] = v.unravel(f);
  std::vector<std::vector<std::uint64_t>> betas(assignments, std::vector<std::uint64_t>(m, 0));
  {
    std::vector<int> digits(nc, 0);
    for (std::uint64_t al = 0; al < assignments; ++al) {
      for (int i = 0; i < m; ++i) {
        std::uint64_t b = 0;
        for (int p : w.incident(i)) b = b * r + digits[p];
        betas[al][i] = b;
      }
      for (int p = nc - 1; p >= 0; --p) {
        if (++digits[p] < r) break;
        digits[p] = 0;
      }
    }
  }
  Vec target(outputs);
  for (std::uint64_t f = 0; f < outputs; ++f) target(f) = v.entries[f];

  EvalFn eval = [&](const Vec& p, Vec& res, Mat* jac) {
    res = -target;
    if (jac) jac->setZero(outputs, layout.size);
    std::vector<cplx> x(m), prefix(m + 1), suffix(m + 1);
    std::vector<Eigen::Index> at(m);
    for (std::uint64_t al = 0; al < assignments; ++al)
      for (std::uint64_t f = 0; f < outputs; ++f) {
        for (int i = 0; i < m; ++i) {
          at[i] = layout.offset[layout.cls[i][betas[al][i]]] + out_idx[f][i];
          x[i] = p(at[i]);
        }
        prefix[0] = 1.0;
        for (int i = 0; i < m; ++i) prefix[i + 1] = prefix[i] * x[i];
        res(f) += prefix[m];
        if (!jac) continue;
        suffix[m] = 1.0;
        for (int i = m - 1; i >= 0; --i) suffix[i] = suffix[i + 1] * x[i];
        for (int i = 0; i < m; ++i) (*jac)(f, at[i]) += prefix[i] * suffix[i + 1];
      }
  };

  std::optional<Vec> constructive;
  if (a.order() == 1 && is_connected(w)) {
    const ElementarySum s = basis_expansion(v);
    if (static_cast<int>(s.terms.size()) <= r) {
      Vec p = Vec::Zero(layout.size);
      for (std::size_t j = 0; j < s.terms.size(); ++j)
        for (int i = 0; i < m; ++i) {
          const auto beta = encode_beta(std::vector<int>(w.incident(i).size(), static_cast<int>(j)), r);
          for (int c = 0; c < v.dims[i]; ++c) p(layout.offset[layout.cls[i][beta]] + c) = s.terms[j][i][c];
        }
      constructive = p;
    }
  }

  const double scale =
      std::pow(std::max(max_abs(v), 1e-12) / std::sqrt(static_cast<double>(assignments)), 1.0 / m);
  std::vector<Vec> params(opts.restarts);
  auto attempt = [&](int id) {
    Vec p = id == 0 && constructive ? *constructive : random_vector(layout.size, scale, opts.seed, id);
    const double res = levenberg_marquardt(p, eval, opts.iters, opts.tol * 1e-3);
    params[id] = std::move(p);
    return res;
  };
  SearchResult out;
  run_restarts(opts.restarts, opts.tol, attempt, out.best_restart, out.best_residual, out.restarts_run);
  if (out.best_restart < 0 || out.best_residual > opts.tol) return out;

  const Vec& best = params[out.best_restart];
  auto compute = [&](int i, const std::vector<int>& digits, cplx* dst) {
    const int c = layout.cls[i][encode_beta(digits, r)];
    for (int q = 0; q < v.dims[i]; ++q) dst[q] = best(layout.offset[c] + q);
  };
  Decomposition d = materialize_invariant(a, r, v.dims, compute);
  out.best_residual = max_abs_diff(contract(d, {opts.tol, opts.budget}), v);
  if (out.best_residual <= opts.tol) out.decomposition = std::move(d);
  return out;
}

IndicatorSearchResult indicator_search(int n, int r, const SearchOptions& opts) {
  if (n < 1) throw InvalidInput("indicator search needs n >= 1");
  if (r < 1) throw InvalidInput("rank must be positive");
  const int m = n + 1;
  // nondecreasing tuples of length m over 0..n
  std::vector<std::vector<int>> tuples;
  std::vector<int> t(m, 0);
  while (true) {
    tuples.push_back(t);
    int k = m - 1;
    while (k >= 0 && t[k] == n) --k;
    if (k < 0) break;
    ++t[k];
    for (int q = k + 1; q < m; ++q) t[q] = t[k];
  }
  const auto rows = static_cast<Eigen::Index>(tuples.size());
  if (saturating_mul(saturating_mul(static_cast<std::uint64_t>(rows), r), m * m) > opts.budget)
    throw BudgetExceeded("indicator search exceeds the budget");
  Vec target = Vec::Zero(rows);
  for (Eigen::Index q = 0; q < rows; ++q) {
    bool covering = true;
    for (int k = 0; k < m; ++k) covering = covering && tuples[q][k] == k;
    if (covering) target(q) = 1.0;
  }
  // parameter d[x][l] sits at x*r + l
  EvalFn eval = [&](const Vec& p, Vec& res, Mat* jac) {
    res = -target;
    if (jac) jac->setZero(rows, m * r);
    std::vector<cplx> prefix(m + 1), suffix(m + 1);
    for (Eigen::Index q = 0; q < rows; ++q) {
      const auto& tq = tuples[q];
      for (int l = 0; l < r; ++l) {
        prefix[0] = 1.0;
        for (int k = 0; k < m; ++k) prefix[k + 1] = prefix[k] * p(tq[k] * r + l);
        res(q) += prefix[m];
        if (!jac) continue;
        suffix[m] = 1.0;
        for (int k = m - 1; k >= 0; --k) suffix[k] = suffix[k + 1] * p(tq[k] * r + l);
        for (int k = 0; k < m; ++k) (*jac)(q, tq[k] * r + l) += prefix[k] * suffix[k + 1];
      }
    }
  };
  std::vector<Vec> params(opts.restarts);
  auto attempt = [&](int id) {
    Vec p = random_vector(m * r, 1.0, opts.seed, id);
    const double res = levenberg_marquardt(p, eval, opts.iters, kIndicatorSuccess * 1e-4);
    params[id] = std::move(p);
    return res;
  };
  IndicatorSearchResult out;
  run_restarts(opts.restarts, kIndicatorSuccess, attempt, out.best_restart, out.best_residual, out.restarts_run);
  if (out.best_restart < 0) return out;
  IndicatorCoefficients c;
  c.n = n;
  c.r = r;
  c.d.assign(m, std::vector<cplx>(r));
  for (int x = 0; x < m; ++x)
    for (int l = 0; l < r; ++l) c.d[x][l] = params[out.best_restart](x * r + l);
  out.best_residual = indicator_residual(c);
  if (out.best_residual <= kIndicatorSuccess) out.coefficients = std::move(c);
  return out;
}

}  // namespace invtensor
