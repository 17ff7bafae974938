#ifndef LATPOS_RIORDAN_HPP
#define LATPOS_RIORDAN_HPP

#include <optional>
#include <vector>

#include "latpos/scheme.hpp"
#include "latpos/series.hpp"

namespace latpos {

// Array with k-th column generating function g * f^k.
struct RiordanSpec {
    PowerSeries g, f;
    enum class Kind { proper, improper } kind;

    std::string to_json() const;
};

// Constant-weight model data: a_i independent of n, b constant gamma,
// optionally with the factored form sum a_i z^i = prod (alpha_j z + beta_j).
struct ConstantScheme {
    int t = 0;
    int ell = 0;
    std::vector<MultiPoly> a; // a_0..a_ell
    MultiPoly gamma;
    std::optional<std::pair<std::vector<MultiPoly>, std::vector<MultiPoly>>> factors;

    void validate() const;
    WeightScheme to_weight_scheme() const;
    static ConstantScheme from_factors(int t, const std::vector<MultiPoly>& alphas,
                                       const std::vector<MultiPoly>& betas, MultiPoly gamma);
};

// Coefficient [z^n] g f^k.
MultiPoly riordan_entry(const RiordanSpec& spec, int n, int k);

// The closed form R(1/(1-gamma z), sum_i a_i z^{t+i} / (1-gamma z)),
// truncated at order N.
RiordanSpec riordan_from_scheme(const ConstantScheme& cs, unsigned N);

// Finite binomial sum over (i, c_1..c_ell) with i + sum c_j = n - t k;
// requires the factored form and is an independent route from the series one.
MultiPoly explicit_entry(const ConstantScheme& cs, int n, int k);

// Expands 1/(1 - gamma z - q sum_i a_i z^{t+i}) to orders (N, K) in (z, q)
// and compares every coefficient with the recurrence truncation.
bool bivariate_gf_check(const ConstantScheme& cs, int N, int K);

// k-th column generating function (sum_i a_i z^{t+i})^k / (1-gamma z)^{k+1}.
PowerSeries column_gf(const ConstantScheme& cs, int k, unsigned N);

} // namespace latpos

#endif
