#include "latpos/pathmodel.hpp"

namespace latpos {

namespace {

struct PathEnum {
    const WeightScheme& scheme;
    int k, n;
    std::uint64_t cap;
    std::vector<std::pair<LatticePath, MultiPoly>> out;
    LatticePath current;

    // Walks forward from (x, y); a path is complete at (k, n).
    void dfs(int x, int y, const MultiPoly& weight) {
        if (x == k && y == n) {
            if (out.size() >= cap)
                raise(ErrorCode::CapExceeded,
                      "path enumeration exceeds cap of " + std::to_string(cap));
            out.emplace_back(current, weight);
            return;
        }
        // Vertical step to height y+1, weight b_{y+1}.
        if (y + 1 <= n) {
            current.steps.push_back(PathStep{true, 0, y + 1});
            dfs(x, y + 1, weight * scheme.b_weight(y + 1));
            current.steps.pop_back();
        }
        // Slanted step (1, t+i) landing at height y+t+i, weight a_{y+t+i}^(i).
        if (x + 1 <= k) {
            for (int i = 0; i <= scheme.ell; ++i) {
                int ny = y + scheme.t + i;
                if (ny > n) break;
                current.steps.push_back(PathStep{false, i, ny});
                dfs(x + 1, ny, weight * scheme.a_weight(ny, i));
                current.steps.pop_back();
            }
        }
    }
};

} // namespace

std::vector<std::pair<LatticePath, MultiPoly>>
enumerate_paths(const WeightScheme& scheme, int k, int n, std::uint64_t cap) {
    if (k < 0 || n < 0) raise(ErrorCode::BadArgument, "path endpoint must be in the first quadrant");
    scheme.validate();
    PathEnum e{scheme, k, n, cap, {}, {}};
    e.dfs(0, 0, MultiPoly(1));
    return e.out;
}

MultiPoly matrix_entry_oracle(const WeightScheme& scheme, int n, int k, std::uint64_t cap) {
    MultiPoly sum;
    for (const auto& [path, w] : enumerate_paths(scheme, k, n, cap)) sum += w;
    return sum;
}

namespace {

// Entry fetch with the M_{n,k} = 0 convention outside the quadrant.
const MultiPoly& entry_or_zero(const PolyMatrix& m, int n, int k) {
    static const MultiPoly zero;
    if (n < 0 || k < 0) return zero;
    return m.at(n, k);
}

// b_n * b_{n-1} * ... * b_{n-len+1}; empty product for len <= 0.
MultiPoly b_falling_product(const WeightScheme& s, int n, int len) {
    MultiPoly p(1);
    for (int i = 0; i < len; ++i) p *= s.b_weight(n - i);
    return p;
}

} // namespace

TriangleTruncation build_matrix_rec1(const WeightScheme& scheme, int N, int K) {
    if (N < 0 || K < 0) raise(ErrorCode::BadArgument, "truncation shape must be nonnegative");
    scheme.validate();
    PolyMatrix m(N + 1, K + 1);
    for (int n = 0; n <= N; ++n) {
        for (int k = 0; k <= K; ++k) {
            if (n == 0 && k == 0) {
                m.at(0, 0) = MultiPoly(1);
                continue;
            }
            if (scheme.t >= 1 && n < scheme.t) {
                // rows 0..t-1: column 0 carries products of b, the rest is 0
                if (k == 0) m.at(n, 0) = b_falling_product(scheme, n, n);
                continue;
            }
            MultiPoly acc;
            for (int i = 0; i <= scheme.ell; ++i) {
                int src = n - scheme.t - i;
                if (src < 0 || k == 0) continue;
                const MultiPoly& prev = entry_or_zero(m, src, k - 1);
                if (!prev.is_zero()) acc += scheme.a_weight(n, i) * prev;
            }
            if (n >= 1) {
                const MultiPoly& up = entry_or_zero(m, n - 1, k);
                if (!up.is_zero()) acc += scheme.b_weight(n) * up;
            }
            m.at(n, k) = std::move(acc);
        }
    }
    return TriangleTruncation{std::move(m), scheme, Orientation::M};
}

TriangleTruncation build_matrix_rec2(const WeightScheme& scheme, int N, int K) {
    if (N < 0 || K < 0) raise(ErrorCode::BadArgument, "truncation shape must be nonnegative");
    scheme.validate();
    const int t = scheme.t, ell = scheme.ell;
    PolyMatrix m(N + 1, K + 1);
    for (int n = 0; n <= N; ++n) {
        for (int k = 0; k <= K; ++k) {
            if (n == 0 && k == 0) {
                m.at(0, 0) = MultiPoly(1);
                continue;
            }
            if (k == 0) {
                m.at(n, 0) = b_falling_product(scheme, n, n);
                continue;
            }
            if (t >= 1 && n < t) continue; // zero above the band
            MultiPoly acc;
            // near-band block: j = 0..ell
            for (int j = 0; j <= ell; ++j) {
                int src = n - t - j;
                if (src < 0) break;
                const MultiPoly& prev = entry_or_zero(m, src, k - 1);
                if (prev.is_zero()) continue;
                MultiPoly coeff;
                for (int mm = 0; mm <= j; ++mm)
                    coeff += scheme.a_weight(n - mm, j - mm) * b_falling_product(scheme, n, mm);
                acc += coeff * prev;
            }
            // far block: j >= 0 while the source row exists
            for (int j = 0; n - t - ell - j - 1 >= 0; ++j) {
                const MultiPoly& prev = entry_or_zero(m, n - t - ell - j - 1, k - 1);
                if (prev.is_zero()) continue;
                MultiPoly coeff;
                for (int mm = 0; mm <= ell; ++mm)
                    coeff += scheme.a_weight(n - j - mm - 1, ell - mm) *
                             b_falling_product(scheme, n, j + mm + 1);
                acc += coeff * prev;
            }
            m.at(n, k) = std::move(acc);
        }
    }
    return TriangleTruncation{std::move(m), scheme, Orientation::M};
}

TriangleTruncation build_transpose_rec(const WeightScheme& scheme, int N, int K) {
    if (N < 0 || K < 0) raise(ErrorCode::BadArgument, "truncation shape must be nonnegative");
    scheme.validate();
    const int t = scheme.t, ell = scheme.ell;
    PolyMatrix m(N + 1, K + 1);
    for (int n = 0; n <= N; ++n) {
        for (int k = 0; k <= K; ++k) {
            if (n == 0 && k == 0) {
                m.at(0, 0) = MultiPoly(1);
                continue;
            }
            if (t >= 1 && k < t) {
                // columns 0..t-1: row 0 carries products of b, the rest is 0
                if (n == 0) m.at(0, k) = b_falling_product(scheme, k, k);
                continue;
            }
            MultiPoly acc;
            for (int i = 0; i <= ell; ++i) {
                int src = k - t - i;
                if (src < 0 || n == 0) continue;
                const MultiPoly& prev = entry_or_zero(m, n - 1, src);
                if (!prev.is_zero()) acc += scheme.a_weight(k, i) * prev;
            }
            if (k >= 1) {
                const MultiPoly& left = entry_or_zero(m, n, k - 1);
                if (!left.is_zero()) acc += scheme.b_weight(k) * left;
            }
            m.at(n, k) = std::move(acc);
        }
    }
    return TriangleTruncation{std::move(m), scheme, Orientation::T};
}

} // namespace latpos
