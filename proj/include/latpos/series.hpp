#ifndef LATPOS_SERIES_HPP
#define LATPOS_SERIES_HPP

#include <vector>

#include "latpos/poly.hpp"

namespace latpos {

// Truncated formal power series over MultiPoly coefficients.
// Holds coefficients of z^0..z^N; arithmetic results carry the minimum
// truncation order of the operands.
class PowerSeries {
public:
    explicit PowerSeries(unsigned truncation_order)
        : coeffs_(truncation_order + 1) {}
    PowerSeries(std::vector<MultiPoly> coeffs)
        : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.emplace_back();
    }

    static PowerSeries zero(unsigned order) { return PowerSeries(order); }
    static PowerSeries constant(const MultiPoly& c, unsigned order);
    // The monomial c*z^k truncated at `order`.
    static PowerSeries monomial(const MultiPoly& c, unsigned k, unsigned order);

    unsigned truncation_order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }

    // Coefficient of z^n; raises IndexBeyondTruncation past the order.
    const MultiPoly& coeff(unsigned n) const;
    void set_coeff(unsigned n, MultiPoly c);

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;
    // Multiplicative inverse up to the truncation order.
    // Requires an invertible constant term (here: the integer unit +-1).
    PowerSeries invert() const;
    PowerSeries pow(unsigned e) const;

    bool operator==(const PowerSeries& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<MultiPoly> coeffs_;
};

} // namespace latpos

#endif
