#ifndef INVTENSOR_POSITIVITY_HPP
#define INVTENSOR_POSITIVITY_HPP

#include <vector>

#include <Eigen/Dense>

#include "invtensor/decomp.hpp"

namespace invtensor {

/// Eigenvalues >= -kPsdTol * max|entry| count as nonnegative.
inline constexpr double kPsdTol = 1e-10;

/// Operator-valued tensor as a (prod rows) x (prod cols) matrix; site 0 is
/// the most significant digit of both row and column indices.
Eigen::MatrixXcd operator_matrix(const GlobalTensor& t, const std::vector<SiteShape>& shapes);
GlobalTensor matrix_operator(const Eigen::MatrixXcd& m, const std::vector<SiteShape>& shapes);

/// Local entry (i, beta) of an operator-valued decomposition as a matrix.
Eigen::MatrixXcd local_matrix(const Decomposition& d, int i, std::uint64_t beta);

/// Hermitian psd square root with negative eigenvalues clamped to zero.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m);
/// Smallest eigenvalue of the Hermitian part and the anti-Hermitian deviation.
double min_eigenvalue(const Eigen::MatrixXcd& m);
bool is_psd(const Eigen::MatrixXcd& m, double tol = kPsdTol);

/// One psd matrix per site and physical index, of size r^{k_i} x r^{k_i}.
struct PsdFamily {
  WscAction action;
  int r = 0;
  std::vector<int> dims;
  std::vector<std::vector<Eigen::MatrixXcd>> e;  ///< [site][j]
};

/// Shapes, Hermiticity, psd and orbit symmetry of every matrix.
ValidationReport validate_psd_family(const PsdFamily& f, double tol = kPsdTol);

/// Every local entry Hermitian psd; throws InvalidInput on non-square sites.
ValidationReport check_separable(const Decomposition& d, double tol = kPsdTol);

/// Local (i, beta) becomes sqrt(sigma_beta) in block row beta, so distinct
/// assignments are orthogonal. Needs every vertex stabilizer to fix the
/// incident copies.
Decomposition purify_separable(const Decomposition& d, const RunOptions& opts = {});

/// xi = sqrt(sigma), decomposed by the free or blending construction (free
/// first). A product sigma seeds with one term.
Decomposition sqrt_purification(const WscAction& a, const GlobalTensor& sigma, const std::vector<int>& sides,
                                const RunOptions& opts = {});

/// sum m_{i_0..i_n} E_{i_0 i_0} (x) ... (x) E_{i_n i_n}.
GlobalTensor diag_embed(const GlobalTensor& m, double tol = kDefaultTol);
/// Inverse of diag_embed on diagonal operators.
GlobalTensor diag_extract(const GlobalTensor& sigma, const std::vector<int>& sides, double tol = kDefaultTol);

Decomposition nn_to_sep(const Decomposition& d, double tol = kDefaultTol);
Decomposition sep_to_nn(const Decomposition& d, double tol = kDefaultTol);

/// tau_beta = sum_j a_{j,beta} (x) E_jj with a_{j,beta} the beta column of
/// sqrt(E_j); same stabilizer requirement as purify_separable.
Decomposition psd_decomp_to_purification(const PsdFamily& f, double tol = kPsdTol);
/// E_j[beta, beta'] = (tau_beta^* tau_beta')_{jj}.
PsdFamily purification_to_psd_decomp(const Decomposition& xi);

/// Pair index a*r + b carries (alpha, alpha'); entry j is E_j[beta, beta'].
Decomposition psd_pair_decomposition(const PsdFamily& f);
GlobalTensor evaluate_psd_decomp(const PsdFamily& f, const RunOptions& opts = {});

/// xi^* xi as an operator-valued tensor.
GlobalTensor purification_square(const Decomposition& xi, const RunOptions& opts = {});

}  // namespace invtensor

#endif
