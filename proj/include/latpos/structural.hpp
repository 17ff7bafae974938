#ifndef LATPOS_STRUCTURAL_HPP
#define LATPOS_STRUCTURAL_HPP

#include "latpos/matrix.hpp"
#include "latpos/pathmodel.hpp"
#include "latpos/scheme.hpp"

namespace latpos {

// Banded lower-triangular weight matrix: entry (i,j) = a_i^(i-j) for
// i-ell <= j <= i, zero elsewhere.
PolyMatrix build_A_matrix(const WeightScheme& scheme, int size);

// The production matrix P: column 0 holds falling products of b, the band
// holds the mixed a/b sums, one superdiagonal a^(0).
PolyMatrix build_P_matrix(const WeightScheme& scheme, int size);
// Rectangular variant (used internally by the verifiers).
PolyMatrix build_P_matrix(const WeightScheme& scheme, int rows, int cols);

// P with columns 1..t deleted; lower triangular for t >= 1.
PolyMatrix build_P_tilde(const WeightScheme& scheme, int rows, int cols);

// Checks P = (... E_{2,1}[b_2] E_{1,0}[b_1]) (1, A) on a size x size window.
bool verify_connection(const WeightScheme& scheme, int size);

// Checks the block decomposition against the recurrence truncation:
// t = 0: columns 0..K of M equal P (1 (+) columns 0..K-1 of M), rows 0..size-1;
// t >= 1: M_n = Ptilde_n (1 (+) M_{n-1}) with n = size (K is ignored).
bool verify_decomposition(const WeightScheme& scheme, int K, int size);

// Builds the ell=2 scheme a^(0)_n = alpha_n lambda_n,
// a^(1)_n = alpha_n mu_n + beta_n lambda_{n-1}, a^(2)_n = beta_n mu_{n-1}
// from four nonnegative factor tables, keeping b untouched.
WeightScheme tridiag_factor_params(const WeightRule& alpha, const WeightRule& beta,
                                   const WeightRule& lambda, const WeightRule& mu,
                                   const WeightRule& b, int t);

// For constant weights with sum_i a_i z^i = prod_j (alpha_j z + beta_j):
// checks that the Toeplitz band matrix equals the product of the
// bidiagonal factors W_j = bidiag(beta_j; alpha_j) on a size x size window.
bool verify_W_factorization(const std::vector<MultiPoly>& alphas,
                            const std::vector<MultiPoly>& betas, int size);

// Convolution prod_j (alpha_j z + beta_j) -> coefficient list a_0..a_ell.
std::vector<MultiPoly> band_coefficients(const std::vector<MultiPoly>& alphas,
                                         const std::vector<MultiPoly>& betas);

} // namespace latpos

#endif
