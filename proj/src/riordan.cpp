#include "latpos/riordan.hpp"

#include <nlohmann/json.hpp>

#include "latpos/pathmodel.hpp"

namespace latpos {

using nlohmann::json;

std::string RiordanSpec::to_json() const {
    json j;
    json gc = json::array(), fc = json::array();
    for (unsigned i = 0; i <= g.truncation_order(); ++i) gc.push_back(g.coeff(i).str());
    for (unsigned i = 0; i <= f.truncation_order(); ++i) fc.push_back(f.coeff(i).str());
    j["g"] = std::move(gc);
    j["f"] = std::move(fc);
    j["N"] = g.truncation_order();
    j["kind"] = kind == Kind::proper ? "proper" : "improper";
    return j.dump();
}

void ConstantScheme::validate() const {
    if (t < 0 || ell < 0) raise(ErrorCode::BadParameters, "t and ell must be nonnegative");
    if (static_cast<int>(a.size()) != ell + 1)
        raise(ErrorCode::BadParameters, "need ell+1 coefficients a_0..a_ell");
    if (factors) {
        const auto& [al, be] = *factors;
        if (al.size() != be.size() || static_cast<int>(al.size()) != ell)
            raise(ErrorCode::BadParameters, "factor lists must have length ell");
        // the factored form must reproduce the coefficients
        std::vector<MultiPoly> conv{MultiPoly(1)};
        for (std::size_t j = 0; j < al.size(); ++j) {
            std::vector<MultiPoly> next(conv.size() + 1);
            for (std::size_t d = 0; d < conv.size(); ++d) {
                next[d] += conv[d] * be[j];
                next[d + 1] += conv[d] * al[j];
            }
            conv = std::move(next);
        }
        if (conv != a)
            raise(ErrorCode::BadParameters,
                  "factored form does not match the coefficient list");
    }
}

WeightScheme ConstantScheme::to_weight_scheme() const {
    validate();
    WeightScheme s;
    s.t = t;
    s.ell = ell;
    for (const auto& c : a) s.a.push_back(WeightRule::constant(c));
    s.b = WeightRule::constant(gamma);
    return s;
}

ConstantScheme ConstantScheme::from_factors(int t, const std::vector<MultiPoly>& alphas,
                                            const std::vector<MultiPoly>& betas,
                                            MultiPoly gamma) {
    ConstantScheme cs;
    cs.t = t;
    cs.ell = static_cast<int>(alphas.size());
    std::vector<MultiPoly> conv{MultiPoly(1)};
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        std::vector<MultiPoly> next(conv.size() + 1);
        for (std::size_t d = 0; d < conv.size(); ++d) {
            next[d] += conv[d] * betas[j];
            next[d + 1] += conv[d] * alphas[j];
        }
        conv = std::move(next);
    }
    cs.a = std::move(conv);
    cs.gamma = std::move(gamma);
    cs.factors = std::make_pair(alphas, betas);
    return cs;
}

MultiPoly riordan_entry(const RiordanSpec& spec, int n, int k) {
    if (n < 0 || k < 0) return MultiPoly(0);
    PowerSeries col = spec.g * spec.f.pow(static_cast<unsigned>(k));
    return col.coeff(static_cast<unsigned>(n));
}

RiordanSpec riordan_from_scheme(const ConstantScheme& cs, unsigned N) {
    cs.validate();
    PowerSeries one = PowerSeries::constant(MultiPoly(1), N);
    PowerSeries denom = one - PowerSeries::monomial(cs.gamma, 1, N);
    PowerSeries g = denom.invert();
    PowerSeries num(N);
    for (int i = 0; i <= cs.ell; ++i) {
        unsigned e = static_cast<unsigned>(cs.t + i);
        if (e <= N) num = num + PowerSeries::monomial(cs.a[static_cast<std::size_t>(i)], e, N);
    }
    PowerSeries f = num * g;
    bool f0_zero = f.coeff(0).is_zero();
    RiordanSpec::Kind kind = f0_zero ? RiordanSpec::Kind::proper : RiordanSpec::Kind::improper;
    return RiordanSpec{std::move(g), std::move(f), kind};
}

MultiPoly explicit_entry(const ConstantScheme& cs, int n, int k) {
    cs.validate();
    if (!cs.factors)
        raise(ErrorCode::MissingFactorForm, "explicit entry needs the factored form");
    if (n < 0 || k < 0) return MultiPoly(0);
    const auto& [al, be] = *cs.factors;
    const int ell = cs.ell;
    const int residual_total = n - cs.t * k;
    if (residual_total < 0) return MultiPoly(0);

    MultiPoly sum;
    // nested bounded loops over (c_1..c_ell) with the residual test on i
    std::vector<int> c(static_cast<std::size_t>(ell), 0);
    for (;;) {
        int csum = 0;
        for (int v : c) csum += v;
        int i = residual_total - csum;
        if (i >= 0) {
            MultiPoly term = binomial(Integer(k + i), Integer(i)) * pow(cs.gamma, static_cast<unsigned>(i));
            for (int j = 0; j < ell; ++j) {
                term *= binomial(Integer(k), Integer(c[static_cast<std::size_t>(j)]));
                term *= pow(al[static_cast<std::size_t>(j)], static_cast<unsigned>(c[static_cast<std::size_t>(j)]));
                term *= pow(be[static_cast<std::size_t>(j)], static_cast<unsigned>(k - c[static_cast<std::size_t>(j)]));
            }
            sum += term;
        }
        // next tuple with 0 <= c_j <= k
        int pos = 0;
        while (pos < ell) {
            if (c[static_cast<std::size_t>(pos)] < k) {
                ++c[static_cast<std::size_t>(pos)];
                break;
            }
            c[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == ell) break;
    }
    return sum;
}

bool bivariate_gf_check(const ConstantScheme& cs, int N, int K) {
    cs.validate();
    const unsigned order = static_cast<unsigned>(N);
    MultiPoly q = MultiPoly::var("q");
    PowerSeries denom = PowerSeries::constant(MultiPoly(1), order) -
                        PowerSeries::monomial(cs.gamma, 1, order);
    for (int i = 0; i <= cs.ell; ++i) {
        unsigned e = static_cast<unsigned>(cs.t + i);
        if (e <= order)
            denom = denom - PowerSeries::monomial(q * cs.a[static_cast<std::size_t>(i)], e, order);
    }
    PowerSeries expansion = denom.invert();

    TriangleTruncation tri = build_matrix_rec1(cs.to_weight_scheme(), N, K);
    for (int n = 0; n <= N; ++n) {
        const MultiPoly& zn = expansion.coeff(static_cast<unsigned>(n));
        for (int k = 0; k <= K; ++k)
            if (zn.coeff_of("q", static_cast<unsigned>(k)) != tri.entries.at(n, k)) return false;
        // powers of q beyond K in this z-coefficient are outside the window
    }
    return true;
}

PowerSeries column_gf(const ConstantScheme& cs, int k, unsigned N) {
    cs.validate();
    if (k < 0) raise(ErrorCode::BadArgument, "column index must be nonnegative");
    PowerSeries one = PowerSeries::constant(MultiPoly(1), N);
    PowerSeries geom = (one - PowerSeries::monomial(cs.gamma, 1, N)).invert();
    PowerSeries num(N);
    for (int i = 0; i <= cs.ell; ++i) {
        unsigned e = static_cast<unsigned>(cs.t + i);
        if (e <= N) num = num + PowerSeries::monomial(cs.a[static_cast<std::size_t>(i)], e, N);
    }
    return num.pow(static_cast<unsigned>(k)) * geom.pow(static_cast<unsigned>(k + 1));
}

} // namespace latpos
