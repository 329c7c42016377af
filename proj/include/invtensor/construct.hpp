#ifndef INVTENSOR_CONSTRUCT_HPP
#define INVTENSOR_CONSTRUCT_HPP

#include <cstdint>
#include <vector>

#include "invtensor/decomp.hpp"

namespace invtensor {

/// Numbers d[i][l] with sum_l d[i_0][l] ... d[i_n][l] = 1 when {i_0..i_n}
/// covers 0..n and 0 otherwise.
struct IndicatorCoefficients {
  int n = 0;
  int r = 0;
  std::vector<std::vector<cplx>> d;  ///< [site][l]
};

/// Max deviation from the indicator over all multisets of size n+1.
double indicator_residual(const IndicatorCoefficients& c);

/// One term per nonempty S subset of {0..n}: d_S[i] = lambda_S [i in S] with
/// lambda_S^{n+1} = (-1)^{n+1-|S|}; r = 2^{n+1} - 1.
IndicatorCoefficients indicator_coefficients(int n);

/// Number of tuples (g_0..g_n) with {g_0 0, ..., g_n n} = {0..n}.
double covering_tuple_count(const WscAction& a);

/// Index set I x G (index p1*|G| + p2); locals picked through the z-map and
/// rescaled by 1/|G| on the orbit of vertex 0. `d` uses the trivial action.
Decomposition invariantize_free(const WscAction& a, const Decomposition& d, const RunOptions& opts = {});

/// `subgroup_elements` (ids in a.group) must form a normal subgroup H; `d_h`
/// lives on restrict_action(a, H). Index set I x G/H.
Decomposition change_group(const WscAction& a, const std::vector<int>& subgroup_elements, const Decomposition& d_h,
                           const RunOptions& opts = {});

/// Labelings z' in (G/H)^copies that agree on every site with some translate
/// of the quotient z-map. Equals |G/H| for free actions on connected complexes.
std::uint64_t count_valid_labelings(const WscAction& a, const std::vector<int>& subgroup_elements,
                                    std::uint64_t budget = 1'000'000);

/// Blending construction from an elementary sum; index l*|terms| + j.
Decomposition invariantize_blending(const WscAction& a, const ElementarySum& s, const IndicatorCoefficients& c,
                                    const RunOptions& opts = {});
/// Uses basis_expansion(v) and the default coefficients.
Decomposition invariantize_blending(const WscAction& a, const GlobalTensor& v, const RunOptions& opts = {});

/// Strong blending construction from an Omega-decomposition; index l*r + j.
/// Returns `d` unchanged for the trivial group.
Decomposition invariantize_strong_blending(const WscAction& a, const Decomposition& d, const IndicatorCoefficients& c,
                                           const RunOptions& opts = {});

/// Constant assignments on `omega` carry whole assignments of the source
/// complex; r_out = r^{|copies of source|}.
Decomposition change_complex_constant(const Decomposition& d, const Wsc& omega);

enum class PowerDirection { to_multiple, from_multiple };

/// to_multiple: d on Omega -> decomposition on m*Omega with the smallest q,
/// q^m >= r (base-q digits over the m duplicates of each copy).
/// from_multiple: d on m*Omega -> decomposition on Omega with r^m.
Decomposition change_complex_power(const Decomposition& d, int m, PowerDirection direction);

/// Routing of every T-generator along a shortest word over S and S^-1.
struct CayleyRouting {
  std::vector<std::vector<std::pair<int, int>>> words;  ///< per t: (index into S, +1/-1)
  std::vector<int> load;                                ///< per s: steps of type s
  int exponent = 0;                                     ///< max load
};

CayleyRouting cayley_routing(const FiniteGroup& g, const std::vector<int>& from_gens, const std::vector<int>& to_gens);

/// d on the Cayley complex of `from_gens` -> decomposition on the Cayley
/// complex of `to_gens` with r_out = r^{routing exponent}.
Decomposition change_complex_cayley(const Decomposition& d, const FiniteGroup& g, const std::vector<int>& from_gens,
                                    const std::vector<int>& to_gens);

}  // namespace invtensor

#endif
