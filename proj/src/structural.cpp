#include "latpos/structural.hpp"

namespace latpos {

PolyMatrix build_A_matrix(const WeightScheme& scheme, int size) {
    if (size < 1) raise(ErrorCode::BadArgument, "size must be >= 1");
    scheme.validate();
    PolyMatrix m(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = std::max(0, i - scheme.ell); j <= i; ++j)
            m.at(i, j) = scheme.a_weight(i, i - j);
    return m;
}

namespace {

MultiPoly b_falling_product(const WeightScheme& s, int n, int len) {
    MultiPoly p(1);
    for (int i = 0; i < len; ++i) p *= s.b_weight(n - i);
    return p;
}

} // namespace

PolyMatrix build_P_matrix(const WeightScheme& scheme, int rows, int cols) {
    if (rows < 1 || cols < 1) raise(ErrorCode::BadArgument, "size must be >= 1");
    scheme.validate();
    const int ell = scheme.ell;
    PolyMatrix m(rows, cols);
    for (int n = 0; n < rows; ++n) {
        for (int k = 0; k < cols; ++k) {
            if (k == 0) {
                m.at(n, 0) = b_falling_product(scheme, n, n); // 1 when n = 0
                continue;
            }
            if (n < k - 1) continue;
            if (n <= k + ell - 1) {
                // band head: sum over m of a_{n-m}^(n-k-m+1) b_n...b_{n-m+1}
                MultiPoly acc;
                for (int mm = 0; n - mm >= 0 && n - k - mm + 1 >= 0; ++mm) {
                    int sup = n - k - mm + 1;
                    if (sup > ell) continue;
                    acc += scheme.a_weight(n - mm, sup) * b_falling_product(scheme, n, mm);
                }
                m.at(n, k) = std::move(acc);
            } else {
                // deep rows: sum_{m=0..ell} a_{k+ell-m-1}^(ell-m) b_n...b_{k+ell-m}
                MultiPoly acc;
                for (int mm = 0; mm <= ell; ++mm)
                    acc += scheme.a_weight(k + ell - mm - 1, ell - mm) *
                           b_falling_product(scheme, n, n + mm - k - ell + 1);
                m.at(n, k) = std::move(acc);
            }
        }
    }
    return m;
}

PolyMatrix build_P_matrix(const WeightScheme& scheme, int size) {
    return build_P_matrix(scheme, size, size);
}

PolyMatrix build_P_tilde(const WeightScheme& scheme, int rows, int cols) {
    PolyMatrix p = build_P_matrix(scheme, rows, cols + scheme.t);
    PolyMatrix r(rows, cols);
    for (int i = 0; i < rows; ++i) {
        r.at(i, 0) = p.at(i, 0);
        for (int j = 1; j < cols; ++j) r.at(i, j) = p.at(i, j + scheme.t);
    }
    return r;
}

bool verify_connection(const WeightScheme& scheme, int size) {
    // Delta = (1, A): first column e_0, then A shifted right.
    PolyMatrix x(size, size);
    x.at(0, 0) = MultiPoly(1);
    PolyMatrix A = build_A_matrix(scheme, size);
    for (int i = 0; i < size; ++i)
        for (int j = 1; j < size; ++j) x.at(i, j) = A.at(i, j - 1);
    // Apply E_{i+1,i}[b_{i+1}] right-to-left: row_{i+1} += b_{i+1} row_i,
    // i increasing, each step reading the already-updated previous row.
    for (int i = 0; i + 1 < size; ++i) {
        MultiPoly bi = scheme.b_weight(i + 1);
        for (int j = 0; j < size; ++j)
            if (!x.at(i, j).is_zero()) x.at(i + 1, j) += bi * x.at(i, j);
    }
    return x == build_P_matrix(scheme, size);
}

bool verify_decomposition(const WeightScheme& scheme, int K, int size) {
    scheme.validate();
    if (size < 1) raise(ErrorCode::BadArgument, "size must be >= 1");
    if (scheme.t == 0) {
        if (K < 1) raise(ErrorCode::BadArgument, "column block index must be >= 1");
        const int R = size - 1; // verify rows 0..R
        TriangleTruncation cur = build_matrix_rec1(scheme, R + 1, K);
        PolyMatrix p = build_P_matrix(scheme, R + 1, R + 2);
        // X = 1 (+) (columns 0..K-1 of M), rows 0..R+1.
        PolyMatrix x(R + 2, K + 1);
        x.at(0, 0) = MultiPoly(1);
        for (int i = 1; i <= R + 1; ++i)
            for (int j = 1; j <= K; ++j) x.at(i, j) = cur.entries.at(i - 1, j - 1);
        for (int n = 0; n <= R; ++n)
            for (int j = 0; j <= K; ++j) {
                MultiPoly acc;
                for (int mm = 0; mm <= std::min(n + 1, R + 1); ++mm)
                    acc += p.at(n, mm) * x.at(mm, j);
                if (acc != cur.entries.at(n, j)) return false;
            }
        return true;
    }
    // t >= 1: M_n = Ptilde_n (1 (+) M_{n-1}); Ptilde is lower triangular,
    // so the window identity is exact.
    const int n = size;
    TriangleTruncation tri = build_matrix_rec1(scheme, n, n);
    PolyMatrix pt = build_P_tilde(scheme, n + 1, n + 1);
    PolyMatrix x(n + 1, n + 1);
    x.at(0, 0) = MultiPoly(1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) x.at(i, j) = tri.entries.at(i - 1, j - 1);
    return pt * x == tri.entries;
}

WeightScheme tridiag_factor_params(const WeightRule& alpha, const WeightRule& beta,
                                   const WeightRule& lambda, const WeightRule& mu,
                                   const WeightRule& b, int t) {
    WeightScheme s;
    s.t = t;
    s.ell = 2;
    s.a.resize(3);
    s.a[0] = WeightRule::fn([alpha, lambda](int n) { return alpha(n) * lambda(n); },
                            "alpha_n*lambda_n");
    s.a[1] = WeightRule::fn(
        [alpha, beta, lambda, mu](int n) {
            if (n < 1) return MultiPoly(0);
            return alpha(n) * mu(n) + beta(n) * lambda(n - 1);
        },
        "alpha_n*mu_n+beta_n*lambda_{n-1}");
    s.a[2] = WeightRule::fn(
        [beta, mu](int n) {
            if (n < 2) return MultiPoly(0);
            return beta(n) * mu(n - 1);
        },
        "beta_n*mu_{n-1}");
    s.b = b;
    return s;
}

std::vector<MultiPoly> band_coefficients(const std::vector<MultiPoly>& alphas,
                                         const std::vector<MultiPoly>& betas) {
    if (alphas.size() != betas.size())
        raise(ErrorCode::BadParameters, "need matching alpha/beta factor lists");
    std::vector<MultiPoly> coeff{MultiPoly(1)};
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        std::vector<MultiPoly> next(coeff.size() + 1);
        for (std::size_t d = 0; d < coeff.size(); ++d) {
            next[d] += coeff[d] * betas[j];
            next[d + 1] += coeff[d] * alphas[j];
        }
        coeff = std::move(next);
    }
    return coeff;
}

bool verify_W_factorization(const std::vector<MultiPoly>& alphas,
                            const std::vector<MultiPoly>& betas, int size) {
    if (size < 1) raise(ErrorCode::BadArgument, "size must be >= 1");
    std::vector<MultiPoly> coeff = band_coefficients(alphas, betas);
    PolyMatrix lhs = toeplitz(coeff, size);
    PolyMatrix prod = PolyMatrix::identity(size);
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        std::vector<MultiPoly> band{betas[j], alphas[j]};
        prod = prod * toeplitz(band, size);
    }
    return lhs == prod;
}

} // namespace latpos
