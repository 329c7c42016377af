#ifndef INVTENSOR_SEARCH_HPP
#define INVTENSOR_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "invtensor/construct.hpp"
#include "invtensor/decomp.hpp"

namespace invtensor {

/// Singular values above tol * sigma_max; the tensor must have two axes.
int exact_edge_rank(const GlobalTensor& m, double tol = 1e-10);

struct SearchOptions {
  int restarts = 32;
  int iters = 400;
  double tol = 1e-6;  ///< success threshold on the max-abs residual
  std::uint64_t seed = 7;
  std::uint64_t budget = kDefaultBudget;  ///< multiply-adds per Jacobian
};

/// A failed search is not a rank lower bound; best_residual says how close
/// the best restart came.
struct SearchResult {
  std::optional<Decomposition> decomposition;
  double best_residual = 0.0;
  int best_restart = -1;
  int restarts_run = 0;
};

/// Damped Gauss-Newton on the locals of orbit representatives (one
/// parameter block per stabilizer class), so condition (b) holds exactly.
/// Restart 0 starts from the basis expansion when the action is trivial and
/// the tensor has at most r nonzero entries.
SearchResult numeric_rank_search(const WscAction& a, const GlobalTensor& v, int r, const SearchOptions& opts = {});

struct IndicatorSearchResult {
  std::optional<IndicatorCoefficients> coefficients;
  double best_residual = 0.0;
  int best_restart = -1;
  int restarts_run = 0;
};

/// Randomized least squares for r indicator terms; success at residual
/// <= 1e-8 (opts.tol is ignored).
IndicatorSearchResult indicator_search(int n, int r, const SearchOptions& opts = {});

inline constexpr double kIndicatorSuccess = 1e-8;

}  // namespace invtensor

#endif
