#include "latpos/series.hpp"

#include <algorithm>

namespace latpos {

PowerSeries PowerSeries::constant(const MultiPoly& c, unsigned order) {
    PowerSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

PowerSeries PowerSeries::monomial(const MultiPoly& c, unsigned k, unsigned order) {
    PowerSeries s(order);
    if (k <= order) s.coeffs_[k] = c;
    return s;
}

const MultiPoly& PowerSeries::coeff(unsigned n) const {
    if (n >= coeffs_.size())
        raise(ErrorCode::IndexBeyondTruncation,
              "coefficient index " + std::to_string(n) + " beyond truncation order " +
              std::to_string(truncation_order()));
    return coeffs_[n];
}

void PowerSeries::set_coeff(unsigned n, MultiPoly c) {
    if (n >= coeffs_.size())
        raise(ErrorCode::IndexBeyondTruncation,
              "coefficient index " + std::to_string(n) + " beyond truncation order " +
              std::to_string(truncation_order()));
    coeffs_[n] = std::move(c);
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    unsigned n = std::min(truncation_order(), o.truncation_order());
    PowerSeries r(n);
    for (unsigned i = 0; i <= n; ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    unsigned n = std::min(truncation_order(), o.truncation_order());
    PowerSeries r(n);
    for (unsigned i = 0; i <= n; ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    unsigned n = std::min(truncation_order(), o.truncation_order());
    PowerSeries r(n);
    for (unsigned i = 0; i <= n; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= n; ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

PowerSeries PowerSeries::invert() const {
    const MultiPoly& c0 = coeffs_[0];
    bool unit = (c0 == MultiPoly(1)) || (c0 == MultiPoly(-1));
    if (!unit)
        raise(ErrorCode::NonInvertibleConstantTerm,
              "series inversion requires constant term +-1, got '" + c0.str() + "'");
    // b_0 = 1/a_0; b_n = -1/a_0 * sum_{i=1..n} a_i b_{n-i}; here 1/a_0 = a_0.
    unsigned n = truncation_order();
    PowerSeries r(n);
    r.coeffs_[0] = c0;
    for (unsigned k = 1; k <= n; ++k) {
        MultiPoly acc;
        for (unsigned i = 1; i <= k; ++i) acc += coeffs_[i] * r.coeffs_[k - i];
        r.coeffs_[k] = -(c0 * acc);
    }
    return r;
}

PowerSeries PowerSeries::pow(unsigned e) const {
    PowerSeries r = PowerSeries::constant(MultiPoly(1), truncation_order());
    PowerSeries b = *this;
    while (e > 0) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

} // namespace latpos
