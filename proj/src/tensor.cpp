#include "invtensor/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace invtensor {

std::uint64_t dims_product(const std::vector<int>& dims) {
  std::uint64_t p = 1;
  for (int d : dims) p = saturating_mul(p, static_cast<std::uint64_t>(d));
  return p;
}

GlobalTensor::GlobalTensor(std::vector<int> d) : dims(std::move(d)) {
  for (int x : dims)
    if (x <= 0) throw InvalidInput("tensor dimensions must be positive");
  entries.assign(dims_product(dims), cplx(0.0));
}

GlobalTensor::GlobalTensor(std::vector<int> d, std::vector<cplx> e) : dims(std::move(d)), entries(std::move(e)) {
  for (int x : dims)
    if (x <= 0) throw InvalidInput("tensor dimensions must be positive");
  if (entries.size() != dims_product(dims)) throw InvalidInput("entry count does not match dims");
}

std::vector<int> GlobalTensor::unravel(std::size_t flat) const {
  std::vector<int> idx(dims.size());
  for (int k = order() - 1; k >= 0; --k) {
    idx[k] = static_cast<int>(flat % dims[k]);
    flat /= dims[k];
  }
  return idx;
}

std::size_t GlobalTensor::ravel(const std::vector<int>& idx) const {
  std::size_t flat = 0;
  for (int k = 0; k < order(); ++k) flat = flat * dims[k] + idx[k];
  return flat;
}

double max_abs(const GlobalTensor& v) {
  double m = 0.0;
  for (const auto& x : v.entries) m = std::max(m, std::abs(x));
  return m;
}

double max_abs_diff(const GlobalTensor& a, const GlobalTensor& b) {
  if (a.dims != b.dims) throw InvalidInput("tensor dims differ");
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a.entries[k] - b.entries[k]));
  return m;
}

GlobalTensor operator+(const GlobalTensor& a, const GlobalTensor& b) {
  if (a.dims != b.dims) throw InvalidInput("tensor dims differ");
  GlobalTensor out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out.entries[k] += b.entries[k];
  return out;
}

GlobalTensor operator*(cplx s, const GlobalTensor& a) {
  GlobalTensor out = a;
  for (auto& x : out.entries) x *= s;
  return out;
}

void check_orbit_dims(const WscAction& a, const std::vector<int>& dims) {
  if (static_cast<int>(dims.size()) != a.complex.num_vertices())
    throw InvalidInput("tensor order does not match the vertex count");
  for (int g = 0; g < a.order(); ++g)
    for (int i = 0; i < a.complex.num_vertices(); ++i)
      if (dims[a.vertex(g, i)] != dims[i]) throw InvalidInput("local dimensions differ along a vertex orbit");
}

GlobalTensor act(const WscAction& a, int g, const GlobalTensor& v) {
  check_orbit_dims(a, v.dims);
  GlobalTensor out(v.dims);
  const int m = v.order();
  std::vector<int> idx(m, 0), src(m);
  for (std::size_t flat = 0; flat < v.size(); ++flat) {
    for (int k = 0; k < m; ++k) src[k] = idx[a.vertex(g, k)];
    out.entries[flat] = v.entries[v.ravel(src)];
    for (int k = m - 1; k >= 0; --k) {
      if (++idx[k] < v.dims[k]) break;
      idx[k] = 0;
    }
  }
  return out;
}

double invariance_deviation(const WscAction& a, const GlobalTensor& v) {
  double dev = 0.0;
  for (int g = 1; g < a.order(); ++g) dev = std::max(dev, max_abs_diff(act(a, g, v), v));
  return dev;
}

bool is_invariant(const WscAction& a, const GlobalTensor& v, double tol) { return invariance_deviation(a, v) <= tol; }

GlobalTensor symmetrize(const WscAction& a, const GlobalTensor& v) {
  GlobalTensor out(v.dims);
  for (int g = 0; g < a.order(); ++g) out = out + act(a, g, v);
  return cplx(1.0 / a.order()) * out;
}

ElementarySum basis_expansion(const GlobalTensor& v) {
  ElementarySum s;
  s.dims = v.dims;
  for (std::size_t flat = 0; flat < v.size(); ++flat) {
    if (v.entries[flat] == cplx(0.0)) continue;
    const auto idx = v.unravel(flat);
    std::vector<std::vector<cplx>> term(v.order());
    for (int k = 0; k < v.order(); ++k) {
      term[k].assign(v.dims[k], cplx(0.0));
      term[k][idx[k]] = k == 0 ? v.entries[flat] : cplx(1.0);
    }
    s.terms.push_back(std::move(term));
  }
  return s;
}

GlobalTensor contract_elementary(const ElementarySum& s) {
  GlobalTensor out(s.dims);
  const int m = static_cast<int>(s.dims.size());
  for (const auto& term : s.terms) {
    if (static_cast<int>(term.size()) != m) throw InvalidInput("term has wrong number of sites");
    for (int k = 0; k < m; ++k)
      if (static_cast<int>(term[k].size()) != s.dims[k]) throw InvalidInput("term vector has wrong length");
    std::vector<cplx> buf{cplx(1.0)};
    for (int k = 0; k < m; ++k) {
      std::vector<cplx> next;
      next.reserve(buf.size() * term[k].size());
      for (const auto& x : buf)
        for (const auto& y : term[k]) next.push_back(x * y);
      buf = std::move(next);
    }
    for (std::size_t f = 0; f < buf.size(); ++f) out.entries[f] += buf[f];
  }
  return out;
}

std::vector<SiteShape> square_shapes(const std::vector<int>& sides) {
  std::vector<SiteShape> s;
  for (int m : sides) s.push_back({m, m});
  return s;
}

std::vector<SiteShape> transpose_shapes(const std::vector<SiteShape>& s) {
  std::vector<SiteShape> t;
  for (const auto& x : s) t.push_back({x.cols, x.rows});
  return t;
}

namespace {

void check_shapes(const GlobalTensor& a, const std::vector<SiteShape>& s) {
  if (s.size() != a.dims.size()) throw InvalidInput("one site shape per tensor axis required");
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s[k].rows * s[k].cols != a.dims[k]) throw InvalidInput("site shape does not match local dimension");
}

}  // namespace

GlobalTensor operator_product(const GlobalTensor& a, const std::vector<SiteShape>& sa, const GlobalTensor& b,
                              const std::vector<SiteShape>& sb) {
  check_shapes(a, sa);
  check_shapes(b, sb);
  const int m = a.order();
  if (b.order() != m) throw InvalidInput("operator tensors have different orders");
  std::vector<int> rows(m), mids(m), cols(m), dims(m);
  for (int k = 0; k < m; ++k) {
    if (sa[k].cols != sb[k].rows) throw InvalidInput("operator shapes are not composable");
    rows[k] = sa[k].rows;
    mids[k] = sa[k].cols;
    cols[k] = sb[k].cols;
    dims[k] = rows[k] * cols[k];
  }
  GlobalTensor out(dims);
  const GlobalTensor rowt(rows), midt(mids), colt(cols);
  std::vector<int> ia(m), ib(m), io(m);
  for (std::size_t fr = 0; fr < rowt.size(); ++fr) {
    const auto r = rowt.unravel(fr);
    for (std::size_t fc = 0; fc < colt.size(); ++fc) {
      const auto c = colt.unravel(fc);
      cplx acc = 0.0;
      for (std::size_t fm = 0; fm < midt.size(); ++fm) {
        const auto mm = midt.unravel(fm);
        for (int k = 0; k < m; ++k) {
          ia[k] = r[k] * mids[k] + mm[k];
          ib[k] = mm[k] * cols[k] + c[k];
        }
        acc += a.entries[a.ravel(ia)] * b.entries[b.ravel(ib)];
      }
      for (int k = 0; k < m; ++k) io[k] = r[k] * cols[k] + c[k];
      out.entries[out.ravel(io)] = acc;
    }
  }
  return out;
}

GlobalTensor operator_adjoint(const GlobalTensor& a, const std::vector<SiteShape>& sa) {
  check_shapes(a, sa);
  const int m = a.order();
  GlobalTensor out(a.dims);
  std::vector<int> it(m);
  for (std::size_t f = 0; f < a.size(); ++f) {
    const auto idx = a.unravel(f);
    for (int k = 0; k < m; ++k) {
      const int r = idx[k] / sa[k].cols, c = idx[k] % sa[k].cols;
      it[k] = c * sa[k].rows + r;
    }
    out.entries[out.ravel(it)] = std::conj(a.entries[f]);
  }
  return out;
}

GlobalTensor hadamard(const GlobalTensor& a, const GlobalTensor& b) {
  if (a.dims != b.dims) throw InvalidInput("tensor dims differ");
  GlobalTensor out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out.entries[k] *= b.entries[k];
  return out;
}

}  // namespace invtensor
