#ifndef INVTENSOR_DECOMP_HPP
#define INVTENSOR_DECOMP_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "invtensor/common.hpp"
#include "invtensor/group.hpp"
#include "invtensor/tensor.hpp"

namespace invtensor {

enum class SiteAlgebra { none, entrywise, matrix };

/// Local tables are dense over r^{k_i} assignments on the incident copies of
/// site i (mixed radix, first incident copy most significant); each entry is
/// a vector of length dims[i], stored contiguously.
struct Decomposition {
  WscAction action;
  int r = 0;
  std::vector<int> dims;
  std::vector<std::vector<cplx>> locals;
  SiteAlgebra algebra = SiteAlgebra::none;
  std::vector<SiteShape> shapes;  ///< per site when entries are matrices
  bool separable = false;
  bool purification = false;

  const Wsc& complex() const { return action.complex; }
  int sites() const { return complex().num_vertices(); }
  int arity(int i) const { return static_cast<int>(complex().incident(i).size()); }
  std::uint64_t table_size(int i) const;
  cplx* local(int i, std::uint64_t beta) { return locals[i].data() + beta * dims[i]; }
  const cplx* local(int i, std::uint64_t beta) const { return locals[i].data() + beta * dims[i]; }
};

/// r^k, throwing BudgetExceeded when it would not fit in memory-sized tables.
std::uint64_t assignment_count(int r, int k);

std::vector<int> decode_beta(std::uint64_t beta, int r, int k);
std::uint64_t encode_beta(const std::vector<int>& digits, int r);

/// Index of (^g beta) at site g.i for beta at site i: (^g beta)(y) = beta(g^-1 y).
std::uint64_t transport_beta(const WscAction& a, int g, int i, std::uint64_t beta, int r);
std::vector<int> transport_digits(const WscAction& a, int g, int i, const std::vector<int>& digits);

/// All-zero decomposition with the given structure.
Decomposition zero_decomposition(const WscAction& a, int r, const std::vector<int>& dims);

/// Throws InvalidInput when tables have the wrong sizes or dims break orbits.
void check_shape(const Decomposition& d);

/// Builds a decomposition that satisfies condition (b) bitwise. `compute`
/// fills the local vector at (site, digits) and is called once per
/// stabilizer class at orbit-representative sites only.
using LocalFn = std::function<void(int site, const std::vector<int>& digits, cplx* out)>;
Decomposition materialize_invariant(const WscAction& a, int r, const std::vector<int>& dims, const LocalFn& compute);

/// Exact contraction (pruned parallel kernel).
GlobalTensor contract(const Decomposition& d, const RunOptions& opts = {});

ValidationReport check_condition_b(const Decomposition& d, double tol = 0.0);

bool verify(const Decomposition& d, const GlobalTensor& target, double tol = kDefaultTol,
            const RunOptions& opts = {});

/// Constant assignments carry the terms, everything else is zero.
Decomposition from_elementary(const Wsc& w, const ElementarySum& s);
Decomposition from_elementary(const WscAction& trivial, const ElementarySum& s);

Decomposition direct_sum(const Decomposition& d1, const Decomposition& d2);
/// Index l = a*r2 + b; entries multiply with the algebra recorded in d1.
Decomposition product(const Decomposition& d1, const Decomposition& d2);
/// Conjugate transpose of every matrix entry.
Decomposition adjoint(const Decomposition& d);

/// Same global tensor, every local vector multiplied by `factor` at the sites
/// listed.
void scale_sites(Decomposition& d, const std::vector<int>& sites, cplx factor);

/// Multiplies the contraction by a positive real c by rescaling every site in
/// the orbit of the smallest vertex by c^{1/|orbit|}.
void rescale_positive(Decomposition& d, double c);

bool same_action(const WscAction& a, const WscAction& b);

}  // namespace invtensor

#endif
