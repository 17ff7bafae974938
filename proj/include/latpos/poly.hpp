#ifndef LATPOS_POLY_HPP
#define LATPOS_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "latpos/error.hpp"

namespace latpos {

// Exact integer scalar used throughout.
using Integer = mpz_class;

// Process-wide interner mapping indeterminate names to dense ids.
// Ids are an internal detail; every externally visible ordering is by name.
class VarTable {
public:
    static VarTable& instance();

    // Interns `name`, validating it (nonempty, no whitespace, [A-Za-z_][A-Za-z0-9_]*).
    std::uint32_t id(const std::string& name);
    std::string name(std::uint32_t id) const;

private:
    VarTable() = default;
};

// Monomial: sparse exponent vector, factors sorted by variable id,
// exponents strictly positive. The empty monomial is the constant 1.
struct Monomial {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [v, e] : factors) d += e;
        return d;
    }
    unsigned degree_in(std::uint32_t var) const {
        for (const auto& [v, e] : factors)
            if (v == var) return e;
        return 0;
    }
    bool operator==(const Monomial& o) const { return factors == o.factors; }
    bool operator<(const Monomial& o) const { return factors < o.factors; }

    static Monomial mul(const Monomial& a, const Monomial& b);
    // Name-based canonical string, e.g. "x1^2*y3". Empty string for the constant monomial.
    std::string str() const;
};

// Sparse multivariate polynomial with exact integer coefficients.
// Invariant: no stored coefficient is zero; the zero polynomial is the empty map.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(long v) { if (v != 0) terms_.emplace(Monomial{}, Integer(v)); }
    MultiPoly(const Integer& v) { if (v != 0) terms_.emplace(Monomial{}, v); }

    static MultiPoly var(const std::string& name, unsigned power = 1);
    // Parses the canonical rendering: terms joined by +/-, each term
    // `coeff`, `coeff*mono` or `mono` with mono = var(^exp)(*var(^exp))*.
    static MultiPoly parse(const std::string& text);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.factors.empty());
    }
    // Constant value; raises SymbolicTermsUnsupported if not constant.
    Integer constant_value() const;

    std::size_t term_count() const { return terms_.size(); }
    unsigned total_degree() const;
    unsigned degree_in(const std::string& var) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    MultiPoly operator-() const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Substitutes an integer for one variable (used by index-polynomial weight rules).
    MultiPoly substitute(const std::string& var, const Integer& value) const;
    // Coefficient of var^power, as a polynomial in the remaining variables.
    MultiPoly coeff_of(const std::string& var, unsigned power) const;

    // First negative term under the canonical print order, if any.
    // (term monomial, coefficient); nullopt when all coefficients are positive.
    std::optional<std::pair<Monomial, Integer>> first_negative_term() const;

    // Canonical text: terms sorted by total degree descending, then by
    // monomial name order; "^" for powers, "*" between factors, "0" when zero.
    std::string str() const;

    const std::map<Monomial, Integer>& terms() const { return terms_; }

private:
    std::map<Monomial, Integer> terms_;

    void add_term(const Monomial& m, const Integer& c);
    friend class PowerSeries;
};

inline bool is_coeff_nonnegative(const MultiPoly& p) {
    return !p.first_negative_term().has_value();
}

MultiPoly binomial(const Integer& n, const Integer& k);
MultiPoly pow(const MultiPoly& base, unsigned e);

} // namespace latpos

#endif
