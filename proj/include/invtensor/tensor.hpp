#ifndef INVTENSOR_TENSOR_HPP
#define INVTENSOR_TENSOR_HPP

#include <cstdint>
#include <vector>

#include "invtensor/common.hpp"
#include "invtensor/group.hpp"

namespace invtensor {

/// Dense complex tensor of shape d_0 x ... x d_n, row-major (last axis fastest).
struct GlobalTensor {
  std::vector<int> dims;
  std::vector<cplx> entries;

  GlobalTensor() = default;
  explicit GlobalTensor(std::vector<int> d);
  GlobalTensor(std::vector<int> d, std::vector<cplx> e);

  std::size_t size() const { return entries.size(); }
  int order() const { return static_cast<int>(dims.size()); }
  std::vector<int> unravel(std::size_t flat) const;
  std::size_t ravel(const std::vector<int>& idx) const;
};

std::uint64_t dims_product(const std::vector<int>& dims);

double max_abs(const GlobalTensor& v);
double max_abs_diff(const GlobalTensor& a, const GlobalTensor& b);
GlobalTensor operator+(const GlobalTensor& a, const GlobalTensor& b);
GlobalTensor operator*(cplx s, const GlobalTensor& a);

/// Throws InvalidInput unless dims agree along vertex orbits and match n+1.
void check_orbit_dims(const WscAction& a, const std::vector<int>& dims);

/// (g.v)[i_0..i_n] = v[i_{g0}..i_{gn}]; act(g, act(h, v)) = act(gh, v).
GlobalTensor act(const WscAction& a, int g, const GlobalTensor& v);
double invariance_deviation(const WscAction& a, const GlobalTensor& v);
bool is_invariant(const WscAction& a, const GlobalTensor& v, double tol = kDefaultTol);
GlobalTensor symmetrize(const WscAction& a, const GlobalTensor& v);

/// Terms w^0 (x) ... (x) w^n with w^i of length dims[i].
struct ElementarySum {
  std::vector<int> dims;
  std::vector<std::vector<std::vector<cplx>>> terms;  ///< [term][site][component]
};

ElementarySum basis_expansion(const GlobalTensor& v);
GlobalTensor contract_elementary(const ElementarySum& s);

/// Matrix shape of an operator-valued site: entry (row, col) sits at
/// component row*cols + col.
struct SiteShape {
  int rows = 1;
  int cols = 1;
  bool operator==(const SiteShape&) const = default;
};

/// Product of operator-valued tensors, sitewise (A B)(r, c) = sum_m A(r, m) B(m, c).
GlobalTensor operator_product(const GlobalTensor& a, const std::vector<SiteShape>& sa, const GlobalTensor& b,
                              const std::vector<SiteShape>& sb);
/// Conjugate transpose of an operator-valued tensor; shapes are transposed.
GlobalTensor operator_adjoint(const GlobalTensor& a, const std::vector<SiteShape>& sa);
std::vector<SiteShape> transpose_shapes(const std::vector<SiteShape>& s);
std::vector<SiteShape> square_shapes(const std::vector<int>& sides);
/// Entrywise product.
GlobalTensor hadamard(const GlobalTensor& a, const GlobalTensor& b);

}  // namespace invtensor

#endif
