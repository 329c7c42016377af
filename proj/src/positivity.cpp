#include "invtensor/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "invtensor/construct.hpp"

namespace invtensor {

namespace {

double matrix_max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

std::vector<int> shape_sides(const std::vector<SiteShape>& shapes) {
  std::vector<int> sides;
  for (const auto& s : shapes) {
    if (s.rows != s.cols) throw InvalidInput("operator site is not square");
    sides.push_back(s.rows);
  }
  return sides;
}

void require_matrix_sites(const Decomposition& d) {
  check_shape(d);
  if (d.algebra != SiteAlgebra::matrix || d.shapes.empty()) throw InvalidInput("decomposition has no matrix sites");
}

// Stabilizers that move incident copies would force two assignments onto the
// same block.
void require_rigid_stabilizers(const WscAction& a) {
  for (const auto& orbit : orbits(a, OrbitDomain::vertices)) {
    const int i = orbit.front();
    for (int h : stabilizer(a, i))
      for (int p : a.complex.incident(i))
        if (a.copy(h, p) != p)
          throw PreconditionFailed("stabilizer of vertex " + std::to_string(i) + " permutes incident copies");
  }
}

std::optional<ElementarySum> rank_one_factor(const GlobalTensor& v, double tol) {
  const double top = max_abs(v);
  ElementarySum s;
  s.dims = v.dims;
  if (top == 0.0) return s;
  std::size_t best = 0;
  for (std::size_t f = 0; f < v.size(); ++f)
    if (std::abs(v.entries[f]) == top) {
      best = f;
      break;
    }
  const auto idx = v.unravel(best);
  const cplx pivot = v.entries[best];
  std::vector<std::vector<cplx>> term(v.order());
  for (int i = 0; i < v.order(); ++i) {
    auto probe = idx;
    for (int c = 0; c < v.dims[i]; ++c) {
      probe[i] = c;
      const cplx x = v.entries[v.ravel(probe)];
      term[i].push_back(i == 0 ? x : x / pivot);
    }
  }
  s.terms.push_back(std::move(term));
  if (max_abs_diff(contract_elementary(s), v) > tol * top) return std::nullopt;
  return s;
}

}  // namespace

Eigen::MatrixXcd operator_matrix(const GlobalTensor& t, const std::vector<SiteShape>& shapes) {
  if (shapes.size() != t.dims.size()) throw InvalidInput("one site shape per tensor axis required");
  Eigen::Index rows = 1, cols = 1;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (shapes[i].rows * shapes[i].cols != t.dims[i]) throw InvalidInput("site shape does not match dims");
    rows *= shapes[i].rows;
    cols *= shapes[i].cols;
  }
  Eigen::MatrixXcd m(rows, cols);
  for (std::size_t f = 0; f < t.size(); ++f) {
    const auto idx = t.unravel(f);
    Eigen::Index row = 0, col = 0;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      row = row * shapes[i].rows + idx[i] / shapes[i].cols;
      col = col * shapes[i].cols + idx[i] % shapes[i].cols;
    }
    m(row, col) = t.entries[f];
  }
  return m;
}

GlobalTensor matrix_operator(const Eigen::MatrixXcd& m, const std::vector<SiteShape>& shapes) {
  std::vector<int> dims;
  Eigen::Index rows = 1, cols = 1;
  for (const auto& s : shapes) {
    dims.push_back(s.rows * s.cols);
    rows *= s.rows;
    cols *= s.cols;
  }
  if (m.rows() != rows || m.cols() != cols) throw InvalidInput("matrix size does not match site shapes");
  GlobalTensor t(dims);
  for (std::size_t f = 0; f < t.size(); ++f) {
    const auto idx = t.unravel(f);
    Eigen::Index row = 0, col = 0;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      row = row * shapes[i].rows + idx[i] / shapes[i].cols;
      col = col * shapes[i].cols + idx[i] % shapes[i].cols;
    }
    t.entries[f] = m(row, col);
  }
  return t;
}

Eigen::MatrixXcd local_matrix(const Decomposition& d, int i, std::uint64_t beta) {
  const auto& s = d.shapes.at(i);
  const cplx* x = d.local(i, beta);
  Eigen::MatrixXcd m(s.rows, s.cols);
  for (int p = 0; p < s.rows; ++p)
    for (int q = 0; q < s.cols; ++q) m(p, q) = x[p * s.cols + q];
  return m;
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

double min_eigenvalue(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool is_psd(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double bound = tol * matrix_max_abs(m);
  if (m.size() && (m - m.adjoint()).cwiseAbs().maxCoeff() > bound) return false;
  return min_eigenvalue(m) >= -bound;
}

ValidationReport validate_psd_family(const PsdFamily& f, double tol) {
  ValidationReport rep;
  const auto& a = f.action;
  check_orbit_dims(a, f.dims);
  if (static_cast<int>(f.e.size()) != a.complex.num_vertices()) {
    rep.add("shape", "one matrix list per site required");
    return rep;
  }
  std::vector<std::uint64_t> sizes(f.e.size());
  for (std::size_t i = 0; i < f.e.size(); ++i) {
    sizes[i] = assignment_count(f.r, static_cast<int>(a.complex.incident(static_cast<int>(i)).size()));
    if (static_cast<int>(f.e[i].size()) != f.dims[i]) {
      rep.add("shape", "site " + std::to_string(i) + " needs one matrix per physical index");
      continue;
    }
    for (int j = 0; j < f.dims[i]; ++j) {
      const auto& m = f.e[i][j];
      if (static_cast<std::uint64_t>(m.rows()) != sizes[i] || static_cast<std::uint64_t>(m.cols()) != sizes[i]) {
        rep.add("shape", "site " + std::to_string(i) + ", index " + std::to_string(j) + " has the wrong size");
        continue;
      }
      const double scale = matrix_max_abs(m);
      const double herm = m.size() ? (m - m.adjoint()).cwiseAbs().maxCoeff() : 0.0;
      if (herm > tol * scale) rep.add("hermitian", "site " + std::to_string(i) + ", index " + std::to_string(j), herm);
      const double ev = min_eigenvalue(m);
      if (ev < -tol * scale) rep.add("psd", "site " + std::to_string(i) + ", index " + std::to_string(j), -ev);
    }
  }
  if (!rep.ok()) return rep;
  for (int i = 0; i < a.complex.num_vertices(); ++i)
    for (int g = 1; g < a.order(); ++g) {
      const int gi = a.vertex(g, i);
      std::vector<std::uint64_t> moved(sizes[i]);
      for (std::uint64_t b = 0; b < sizes[i]; ++b) moved[b] = transport_beta(a, g, i, b, f.r);
      for (int j = 0; j < f.dims[i]; ++j) {
        double dev = 0.0;
        for (std::uint64_t b = 0; b < sizes[i]; ++b)
          for (std::uint64_t c = 0; c < sizes[i]; ++c)
            dev = std::max(dev, std::abs(f.e[gi][j](moved[b], moved[c]) - f.e[i][j](b, c)));
        if (dev > tol * std::max(1.0, matrix_max_abs(f.e[i][j])))
          rep.add("orbit_symmetry", "site " + std::to_string(i) + ", element " + std::to_string(g), dev);
      }
    }
  return rep;
}

ValidationReport check_separable(const Decomposition& d, double tol) {
  require_matrix_sites(d);
  shape_sides(d.shapes);
  ValidationReport rep;
  for (int i = 0; i < d.sites(); ++i)
    for (std::uint64_t beta = 0; beta < d.table_size(i); ++beta) {
      const auto m = local_matrix(d, i, beta);
      const double scale = matrix_max_abs(m);
      const double herm = m.size() ? (m - m.adjoint()).cwiseAbs().maxCoeff() : 0.0;
      if (herm > tol * scale)
        rep.add("hermitian", "site " + std::to_string(i) + ", assignment " + std::to_string(beta), herm);
      const double ev = min_eigenvalue(m);
      if (ev < -tol * scale)
        rep.add("psd", "site " + std::to_string(i) + ", assignment " + std::to_string(beta), -ev);
    }
  return rep;
}

Decomposition purify_separable(const Decomposition& d, const RunOptions& opts) {
  const auto rep = check_separable(d);
  if (!rep.ok()) throw PreconditionFailed("decomposition is not separable: " + rep.violations.front().detail);
  if (!check_condition_b(d, opts.tol).ok()) throw PreconditionFailed("decomposition violates the invariance condition");
  require_rigid_stabilizers(d.action);
  const auto sides = shape_sides(d.shapes);
  std::vector<int> dims(d.sites());
  std::vector<SiteShape> shapes(d.sites());
  for (int i = 0; i < d.sites(); ++i) {
    const int blocks = static_cast<int>(d.table_size(i));
    shapes[i] = {sides[i] * blocks, sides[i]};
    dims[i] = shapes[i].rows * shapes[i].cols;
  }
  auto compute = [&](int i, const std::vector<int>& digits, cplx* out) {
    const std::uint64_t beta = encode_beta(digits, d.r);
    const int m = sides[i];
    std::fill_n(out, dims[i], cplx(0.0));
    const Eigen::MatrixXcd root = psd_sqrt(local_matrix(d, i, beta));
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q) out[(beta * m + p) * m + q] = root(p, q);
  };
  Decomposition xi = materialize_invariant(d.action, d.r, dims, compute);
  xi.algebra = SiteAlgebra::matrix;
  xi.shapes = shapes;
  xi.purification = true;
  return xi;
}

Decomposition sqrt_purification(const WscAction& a, const GlobalTensor& sigma, const std::vector<int>& sides,
                                const RunOptions& opts) {
  require_valid(a);
  const auto shapes = square_shapes(sides);
  const Eigen::MatrixXcd m = operator_matrix(sigma, shapes);
  if (!is_psd(m)) throw PreconditionFailed("operator is not Hermitian positive semidefinite");
  if (invariance_deviation(a, sigma) > opts.tol * std::max(1.0, max_abs(sigma)))
    throw PreconditionFailed("operator is not invariant");
  const GlobalTensor xi_full = symmetrize(a, matrix_operator(psd_sqrt(m), shapes));
  const auto single = rank_one_factor(xi_full, 1e-12);
  const ElementarySum seed = single ? *single : basis_expansion(xi_full);

  Decomposition xi;
  if (a.order() == 1) {
    xi = from_elementary(a, seed);
  } else if (is_free(a)) {
    xi = invariantize_free(a, from_elementary(trivial_action(a.complex), seed), opts);
  } else if (is_blending(a)) {
    xi = invariantize_blending(a, seed, indicator_coefficients(a.complex.n()), opts);
  } else {
    throw PreconditionFailed("action is neither free nor blending");
  }
  xi.algebra = SiteAlgebra::matrix;
  xi.shapes = shapes;
  xi.purification = true;
  return xi;
}

GlobalTensor diag_embed(const GlobalTensor& m, double tol) {
  const double bound = tol * std::max(1.0, max_abs(m));
  std::vector<int> dims;
  for (int d : m.dims) dims.push_back(d * d);
  GlobalTensor out(dims);
  for (std::size_t f = 0; f < m.size(); ++f) {
    const cplx x = m.entries[f];
    if (std::abs(x.imag()) > bound || x.real() < -bound)
      throw PreconditionFailed("tensor entry " + std::to_string(f) + " is not nonnegative");
    auto idx = m.unravel(f);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = idx[i] * m.dims[i] + idx[i];
    out.entries[out.ravel(idx)] = x;
  }
  return out;
}

GlobalTensor diag_extract(const GlobalTensor& sigma, const std::vector<int>& sides, double tol) {
  if (sides.size() != sigma.dims.size()) throw InvalidInput("one side per site required");
  const double bound = tol * std::max(1.0, max_abs(sigma));
  GlobalTensor out(sides);
  for (std::size_t f = 0; f < sigma.size(); ++f) {
    auto idx = sigma.unravel(f);
    bool diagonal = true;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      diagonal = diagonal && idx[i] / sides[i] == idx[i] % sides[i];
      idx[i] /= sides[i];
    }
    if (diagonal)
      out.entries[out.ravel(idx)] = sigma.entries[f];
    else if (std::abs(sigma.entries[f]) > bound)
      throw PreconditionFailed("operator is not diagonal");
  }
  return out;
}

Decomposition nn_to_sep(const Decomposition& d, double tol) {
  check_shape(d);
  std::vector<int> dims;
  for (int x : d.dims) dims.push_back(x * x);
  Decomposition out = zero_decomposition(d.action, d.r, dims);
  out.algebra = SiteAlgebra::matrix;
  out.shapes = square_shapes(d.dims);
  out.separable = true;
  for (int i = 0; i < d.sites(); ++i) {
    const int m = d.dims[i];
    for (std::uint64_t beta = 0; beta < d.table_size(i); ++beta) {
      const cplx* v = d.local(i, beta);
      cplx* w = out.local(i, beta);
      for (int c = 0; c < m; ++c) {
        if (std::abs(v[c].imag()) > tol || v[c].real() < -tol)
          throw PreconditionFailed("local vector at site " + std::to_string(i) + " is not nonnegative");
        w[c * m + c] = v[c];
      }
    }
  }
  return out;
}

Decomposition sep_to_nn(const Decomposition& d, double tol) {
  require_matrix_sites(d);
  const auto sides = shape_sides(d.shapes);
  Decomposition out = zero_decomposition(d.action, d.r, sides);
  out.algebra = SiteAlgebra::entrywise;
  for (int i = 0; i < d.sites(); ++i) {
    const int m = sides[i];
    for (std::uint64_t beta = 0; beta < d.table_size(i); ++beta) {
      const cplx* v = d.local(i, beta);
      cplx* w = out.local(i, beta);
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
          const cplx x = v[p * m + q];
          if (p == q) {
            if (std::abs(x.imag()) > tol || x.real() < -tol)
              throw PreconditionFailed("diagonal entry at site " + std::to_string(i) + " is not nonnegative");
            w[p] = x;
          } else if (std::abs(x) > tol) {
            throw PreconditionFailed("local operator at site " + std::to_string(i) + " is not diagonal");
          }
        }
    }
  }
  return out;
}

Decomposition psd_decomp_to_purification(const PsdFamily& f, double tol) {
  const auto rep = validate_psd_family(f, tol);
  if (!rep.ok()) throw PreconditionFailed("psd family invalid: " + rep.violations.front().kind);
  require_rigid_stabilizers(f.action);
  const int m = f.action.complex.num_vertices();
  std::vector<std::vector<Eigen::MatrixXcd>> roots(m);
  std::vector<int> dims(m);
  std::vector<SiteShape> shapes(m);
  for (int i = 0; i < m; ++i) {
    const int t = static_cast<int>(assignment_count(f.r, static_cast<int>(f.action.complex.incident(i).size())));
    shapes[i] = {t * f.dims[i], f.dims[i]};
    dims[i] = shapes[i].rows * shapes[i].cols;
  }
  for (const auto& orbit : orbits(f.action, OrbitDomain::vertices))
    for (const auto& e : f.e[orbit.front()]) roots[orbit.front()].push_back(psd_sqrt(e));
  auto compute = [&](int i, const std::vector<int>& digits, cplx* out) {
    const std::uint64_t beta = encode_beta(digits, f.r);
    const int d = f.dims[i];
    std::fill_n(out, dims[i], cplx(0.0));
    for (int j = 0; j < d; ++j) {
      const auto& root = roots[i][j];
      for (Eigen::Index k = 0; k < root.rows(); ++k) out[(k * d + j) * d + j] = root(k, beta);
    }
  };
  Decomposition xi = materialize_invariant(f.action, f.r, dims, compute);
  xi.algebra = SiteAlgebra::matrix;
  xi.shapes = shapes;
  xi.purification = true;
  return xi;
}

PsdFamily purification_to_psd_decomp(const Decomposition& xi) {
  require_matrix_sites(xi);
  PsdFamily f;
  f.action = xi.action;
  f.r = xi.r;
  for (const auto& s : xi.shapes) f.dims.push_back(s.cols);
  f.e.resize(xi.sites());
  for (int i = 0; i < xi.sites(); ++i) {
    const auto t = static_cast<Eigen::Index>(xi.table_size(i));
    const int rows = xi.shapes[i].rows, cols = xi.shapes[i].cols;
    for (int j = 0; j < cols; ++j) {
      // column j of every tau_beta, side by side
      Eigen::MatrixXcd c(rows, t);
      for (Eigen::Index b = 0; b < t; ++b) {
        const cplx* x = xi.local(i, static_cast<std::uint64_t>(b));
        for (int p = 0; p < rows; ++p) c(p, b) = x[p * cols + j];
      }
      f.e[i].push_back(c.adjoint() * c);
    }
  }
  return f;
}

Decomposition psd_pair_decomposition(const PsdFamily& f) {
  const int r2 = f.r * f.r;
  Decomposition d = zero_decomposition(f.action, r2, f.dims);
  for (int i = 0; i < d.sites(); ++i) {
    const int k = d.arity(i);
    std::vector<int> a(k), b(k);
    for (std::uint64_t beta = 0; beta < d.table_size(i); ++beta) {
      const auto digits = decode_beta(beta, r2, k);
      for (int s = 0; s < k; ++s) {
        a[s] = digits[s] / f.r;
        b[s] = digits[s] % f.r;
      }
      const auto row = static_cast<Eigen::Index>(encode_beta(a, f.r));
      const auto col = static_cast<Eigen::Index>(encode_beta(b, f.r));
      cplx* out = d.local(i, beta);
      for (int j = 0; j < f.dims[i]; ++j) out[j] = f.e[i][j](row, col);
    }
  }
  return d;
}

GlobalTensor evaluate_psd_decomp(const PsdFamily& f, const RunOptions& opts) {
  return contract(psd_pair_decomposition(f), opts);
}

GlobalTensor purification_square(const Decomposition& xi, const RunOptions& opts) {
  require_matrix_sites(xi);
  const Eigen::MatrixXcd x = operator_matrix(contract(xi, opts), xi.shapes);
  std::vector<SiteShape> out;
  for (const auto& s : xi.shapes) out.push_back({s.cols, s.cols});
  return matrix_operator(x.adjoint() * x, out);
}

}  // namespace invtensor
