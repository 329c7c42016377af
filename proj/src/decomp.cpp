#include "invtensor/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "invtensor/kernels.hpp"

namespace invtensor {

namespace {

// Local tables above this many entries are refused outright.
constexpr std::uint64_t kMaxTableEntries = 1ull << 28;

}  // namespace

std::uint64_t assignment_count(int r, int k) {
  if (r < 0) throw InvalidInput("index size must be nonnegative");
  const std::uint64_t t = saturating_pow(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(k));
  if (t > kMaxTableEntries)
    throw BudgetExceeded("local table with " + std::to_string(r) + "^" + std::to_string(k) + " entries is too large");
  return t;
}

std::uint64_t Decomposition::table_size(int i) const { return assignment_count(r, arity(i)); }

std::vector<int> decode_beta(std::uint64_t beta, int r, int k) {
  std::vector<int> digits(k);
  for (int s = k - 1; s >= 0; --s) {
    digits[s] = static_cast<int>(beta % r);
    beta /= r;
  }
  return digits;
}

std::uint64_t encode_beta(const std::vector<int>& digits, int r) {
  std::uint64_t beta = 0;
  for (int x : digits) beta = beta * r + x;
  return beta;
}

std::vector<int> transport_digits(const WscAction& a, int g, int i, const std::vector<int>& digits) {
  const Wsc& w = a.complex;
  const int j = a.vertex(g, i);
  const int ginv = a.group.inv(g);
  const auto& inc = w.incident(j);
  std::vector<int> out(inc.size());
  for (std::size_t s = 0; s < inc.size(); ++s) out[s] = digits[w.local_slot(i, a.copy(ginv, inc[s]))];
  return out;
}

std::uint64_t transport_beta(const WscAction& a, int g, int i, std::uint64_t beta, int r) {
  const int k = static_cast<int>(a.complex.incident(i).size());
  return encode_beta(transport_digits(a, g, i, decode_beta(beta, r, k)), r);
}

Decomposition zero_decomposition(const WscAction& a, int r, const std::vector<int>& dims) {
  check_orbit_dims(a, dims);
  Decomposition d;
  d.action = a;
  d.r = r;
  d.dims = dims;
  d.locals.resize(d.sites());
  for (int i = 0; i < d.sites(); ++i) d.locals[i].assign(d.table_size(i) * dims[i], cplx(0.0));
  return d;
}

void check_shape(const Decomposition& d) {
  check_orbit_dims(d.action, d.dims);
  if (d.r < 0) throw InvalidInput("index size must be nonnegative");
  if (static_cast<int>(d.locals.size()) != d.sites()) throw InvalidInput("one local table per site required");
  for (int i = 0; i < d.sites(); ++i)
    if (d.locals[i].size() != d.table_size(i) * static_cast<std::uint64_t>(d.dims[i]))
      throw InvalidInput("local table at site " + std::to_string(i) + " has " + std::to_string(d.locals[i].size()) +
                         " entries, expected " + std::to_string(d.table_size(i) * d.dims[i]));
  if (!d.shapes.empty()) {
    if (static_cast<int>(d.shapes.size()) != d.sites()) throw InvalidInput("one site shape per site required");
    for (int i = 0; i < d.sites(); ++i)
      if (d.shapes[i].rows * d.shapes[i].cols != d.dims[i]) throw InvalidInput("site shape does not match dims");
  }
}

Decomposition materialize_invariant(const WscAction& a, int r, const std::vector<int>& dims, const LocalFn& compute) {
  Decomposition d = zero_decomposition(a, r, dims);
  const auto reps = orbits(a, OrbitDomain::vertices);
  for (const auto& orbit : reps) {
    const int i = orbit.front();
    const int k = d.arity(i);
    const int di = dims[i];
    const auto stab = stabilizer(a, i);
    const std::uint64_t t = d.table_size(i);
    std::vector<cplx> values(t * di);
    for (std::uint64_t beta = 0; beta < t; ++beta) {
      const auto digits = decode_beta(beta, r, k);
      std::uint64_t canon = beta;
      for (int h : stab) canon = std::min(canon, encode_beta(transport_digits(a, h, i, digits), r));
      if (canon == beta)
        compute(i, digits, values.data() + beta * di);
      else
        std::copy_n(values.data() + canon * di, di, values.data() + beta * di);
    }
    for (int g = 0; g < a.order(); ++g) {
      const int j = a.vertex(g, i);
      for (std::uint64_t beta = 0; beta < t; ++beta) {
        const std::uint64_t target = transport_beta(a, g, i, beta, r);
        std::copy_n(values.data() + beta * di, di, d.local(j, target));
      }
    }
  }
  return d;
}

GlobalTensor contract(const Decomposition& d, const RunOptions& opts) { return contract_parallel(d, opts.budget); }

ValidationReport check_condition_b(const Decomposition& d, double tol) {
  check_shape(d);
  ValidationReport rep;
  const auto& a = d.action;
  for (int i = 0; i < d.sites(); ++i) {
    const std::uint64_t t = d.table_size(i);
    for (int g = 1; g < a.order(); ++g) {
      const int j = a.vertex(g, i);
      for (std::uint64_t beta = 0; beta < t; ++beta) {
        const std::uint64_t target = transport_beta(a, g, i, beta, d.r);
        const cplx* x = d.local(i, beta);
        const cplx* y = d.local(j, target);
        double dev = 0.0;
        for (int c = 0; c < d.dims[i]; ++c) dev = std::max(dev, std::abs(x[c] - y[c]));
        if (dev > tol)
          rep.add("condition_b",
                  "site " + std::to_string(i) + ", element " + std::to_string(g) + ", assignment " +
                      std::to_string(beta),
                  dev);
      }
    }
  }
  return rep;
}

bool verify(const Decomposition& d, const GlobalTensor& target, double tol, const RunOptions& opts) {
  if (target.dims != d.dims) return false;
  if (!check_condition_b(d, tol).ok()) return false;
  return max_abs_diff(contract(d, opts), target) <= tol;
}

Decomposition from_elementary(const WscAction& trivial, const ElementarySum& s) {
  if (trivial.order() != 1) throw PreconditionFailed("from_elementary builds decompositions for the trivial action");
  const Wsc& w = trivial.complex;
  if (!is_connected(w)) throw PreconditionFailed("complex is not connected");
  if (static_cast<int>(s.dims.size()) != w.num_vertices()) throw InvalidInput("sum has the wrong number of sites");
  const int r = static_cast<int>(s.terms.size());
  Decomposition d = zero_decomposition(trivial, r, s.dims);
  for (int i = 0; i < d.sites(); ++i) {
    const int k = d.arity(i);
    for (int j = 0; j < r; ++j) {
      if (static_cast<int>(s.terms[j].size()) != d.sites() || static_cast<int>(s.terms[j][i].size()) != s.dims[i])
        throw InvalidInput("term shape does not match dims");
      const std::uint64_t beta = encode_beta(std::vector<int>(k, j), r);
      std::copy(s.terms[j][i].begin(), s.terms[j][i].end(), d.local(i, beta));
    }
  }
  return d;
}

Decomposition from_elementary(const Wsc& w, const ElementarySum& s) { return from_elementary(trivial_action(w), s); }

bool same_action(const WscAction& a, const WscAction& b) {
  return a.complex == b.complex && a.group == b.group && a.vertex_act == b.vertex_act && a.copy_act == b.copy_act;
}

namespace {

void require_same_structure(const Decomposition& d1, const Decomposition& d2) {
  if (!same_action(d1.action, d2.action)) throw InvalidInput("decompositions live on different actions");
  if (d1.sites() != d2.sites()) throw InvalidInput("decompositions have different site counts");
}

}  // namespace

Decomposition direct_sum(const Decomposition& d1, const Decomposition& d2) {
  check_shape(d1);
  check_shape(d2);
  require_same_structure(d1, d2);
  if (d1.dims != d2.dims) throw InvalidInput("decompositions have different dims");
  if (!is_connected(d1.complex())) throw PreconditionFailed("complex is not connected");
  Decomposition d = zero_decomposition(d1.action, d1.r + d2.r, d1.dims);
  d.algebra = d1.algebra;
  d.shapes = d1.shapes;
  d.separable = d1.separable && d2.separable;
  d.purification = d1.purification && d2.purification;
  for (int i = 0; i < d.sites(); ++i) {
    const int k = d.arity(i);
    const int di = d.dims[i];
    for (std::uint64_t beta = 0; beta < d.table_size(i); ++beta) {
      auto digits = decode_beta(beta, d.r, k);
      const bool low = std::all_of(digits.begin(), digits.end(), [&](int x) { return x < d1.r; });
      const bool high = std::all_of(digits.begin(), digits.end(), [&](int x) { return x >= d1.r; });
      if (low) {
        std::copy_n(d1.local(i, encode_beta(digits, d1.r)), di, d.local(i, beta));
      } else if (high) {
        for (auto& x : digits) x -= d1.r;
        std::copy_n(d2.local(i, encode_beta(digits, d2.r)), di, d.local(i, beta));
      }
    }
  }
  return d;
}

Decomposition product(const Decomposition& d1, const Decomposition& d2) {
  check_shape(d1);
  check_shape(d2);
  require_same_structure(d1, d2);
  if (d1.algebra != d2.algebra) throw InvalidInput("decompositions use different algebra modes");
  if (d1.algebra == SiteAlgebra::none) throw PreconditionFailed("no algebra structure configured for product");
  const int m = d1.sites();
  std::vector<int> dims(m);
  std::vector<SiteShape> shapes;
  if (d1.algebra == SiteAlgebra::entrywise) {
    if (d1.dims != d2.dims) throw InvalidInput("entrywise product needs equal dims");
    dims = d1.dims;
  } else {
    if (d1.shapes.empty() || d2.shapes.empty()) throw InvalidInput("matrix product needs site shapes");
    for (int i = 0; i < m; ++i) {
      if (d1.shapes[i].cols != d2.shapes[i].rows) throw InvalidInput("matrix shapes are not composable");
      shapes.push_back({d1.shapes[i].rows, d2.shapes[i].cols});
      dims[i] = shapes[i].rows * shapes[i].cols;
    }
  }
  Decomposition d = zero_decomposition(d1.action, d1.r * d2.r, dims);
  d.algebra = d1.algebra;
  d.shapes = shapes;
  for (int i = 0; i < m; ++i) {
    const int k = d.arity(i);
    std::vector<int> a(k), b(k);
    for (std::uint64_t beta = 0; beta < d.table_size(i); ++beta) {
      const auto digits = decode_beta(beta, d.r, k);
      for (int s = 0; s < k; ++s) {
        a[s] = digits[s] / d2.r;
        b[s] = digits[s] % d2.r;
      }
      const cplx* x = d1.local(i, encode_beta(a, d1.r));
      const cplx* y = d2.local(i, encode_beta(b, d2.r));
      cplx* z = d.local(i, beta);
      if (d.algebra == SiteAlgebra::entrywise) {
        for (int c = 0; c < dims[i]; ++c) z[c] = x[c] * y[c];
      } else {
        const int rows = d1.shapes[i].rows, mid = d1.shapes[i].cols, cols = d2.shapes[i].cols;
        for (int p = 0; p < rows; ++p)
          for (int q = 0; q < cols; ++q) {
            cplx acc = 0.0;
            for (int t = 0; t < mid; ++t) acc += x[p * mid + t] * y[t * cols + q];
            z[p * cols + q] = acc;
          }
      }
    }
  }
  return d;
}

Decomposition adjoint(const Decomposition& d) {
  check_shape(d);
  if (d.shapes.empty()) throw InvalidInput("adjoint needs site shapes");
  Decomposition out = d;
  out.shapes = transpose_shapes(d.shapes);
  out.separable = false;
  out.purification = false;
  for (int i = 0; i < d.sites(); ++i) {
    const int rows = d.shapes[i].rows, cols = d.shapes[i].cols;
    for (std::uint64_t beta = 0; beta < d.table_size(i); ++beta) {
      const cplx* x = d.local(i, beta);
      cplx* y = out.local(i, beta);
      for (int p = 0; p < rows; ++p)
        for (int q = 0; q < cols; ++q) y[q * rows + p] = std::conj(x[p * cols + q]);
    }
  }
  return out;
}

void scale_sites(Decomposition& d, const std::vector<int>& sites, cplx factor) {
  for (int i : sites)
    for (auto& x : d.locals[i]) x *= factor;
}

void rescale_positive(Decomposition& d, double c) {
  if (!(c > 0.0)) throw InvalidInput("rescale factor must be positive");
  const auto orbit = orbits(d.action, OrbitDomain::vertices).front();
  scale_sites(d, orbit, cplx(std::pow(c, 1.0 / static_cast<double>(orbit.size()))));
}

}  // namespace invtensor
