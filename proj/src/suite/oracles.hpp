#ifndef INVTENSOR_SUITE_ORACLES_HPP
#define INVTENSOR_SUITE_ORACLES_HPP

#include <map>

#include "invtensor/construct.hpp"
#include "invtensor/positivity.hpp"

// Brute-force reference computations written straight from the definitions.
// They share data types with the library but none of its algorithms.
namespace invtensor::oracle {

/// Sum over all assignments, one output entry at a time.
GlobalTensor contract(const Decomposition& d);

bool is_free(const WscAction& a);
/// Enumerates every tuple (g_0..g_n) whose images g_i i cover the vertices.
bool is_blending(const WscAction& a);
bool is_strongly_blending(const WscAction& a);

bool is_connected(const Wsc& w);

/// Stored weights of the Cayley complex from the directed edge list.
std::map<Simplex, std::uint64_t> cayley_weights(const FiniteGroup& g, const std::vector<int>& gens);

/// Residual over all ordered (n+1)-tuples.
double indicator_residual(const IndicatorCoefficients& c);

/// max_{g, idx} |v[idx] - (g.v)[idx]| evaluated index by index.
double invariance_deviation(const WscAction& a, const GlobalTensor& v);

/// Double sum over pairs of full assignments.
GlobalTensor evaluate_psd(const PsdFamily& f);

/// Sitewise product of operator-valued tensors by explicit summation.
GlobalTensor operator_product(const GlobalTensor& a, const std::vector<SiteShape>& sa, const GlobalTensor& b,
                              const std::vector<SiteShape>& sb);

/// x = c u with real c >= 0, up to tol * max|x|.
bool nonnegative_multiple(const cplx* x, const cplx* u, int n, double tol);

/// Gaussian elimination with full pivoting.
int matrix_rank(const GlobalTensor& m, double tol);

}  // namespace invtensor::oracle

#endif
