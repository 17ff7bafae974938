#include "latpos/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace latpos {

using nlohmann::json;

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = MultiPoly(1);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_)
        raise(ErrorCode::BadArgument, "matrix product shape mismatch");
    PolyMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const MultiPoly& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const MultiPoly& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rows,
                                 const std::vector<int>& cols) const {
    PolyMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            r.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return r;
}

PolyMatrix PolyMatrix::leading_principal(int n) const {
    if (n > rows_ || n > cols_)
        raise(ErrorCode::OutOfBounds, "leading principal submatrix larger than matrix");
    PolyMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = at(i, j);
    return r;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool PolyMatrix::all_integer() const {
    for (const auto& e : entries_)
        if (!e.is_constant()) return false;
    return true;
}

std::string PolyMatrix::to_csv() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) out += ',';
            out += at(i, j).str();
        }
        out += '\n';
    }
    return out;
}

std::string PolyMatrix::to_json() const {
    json rows = json::array();
    for (int i = 0; i < rows_; ++i) {
        json row = json::array();
        for (int j = 0; j < cols_; ++j) row.push_back(at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

void MinorSpec::validate(const PolyMatrix& m) const {
    if (rows.empty() || rows.size() != cols.size())
        raise(ErrorCode::BadArgument, "minor spec needs equal, nonempty index lists");
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        if (rows[i] >= rows[i + 1] || cols[i] >= cols[i + 1])
            raise(ErrorCode::BadArgument, "minor spec indices must be strictly increasing");
    if (rows.front() < 0 || rows.back() >= m.rows() || cols.front() < 0 || cols.back() >= m.cols())
        raise(ErrorCode::OutOfBounds, "minor spec out of bounds");
}

std::string MinorSpec::str() const {
    auto list = [](const std::vector<int>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v[i]);
        }
        return s + "}";
    };
    return "rows" + list(rows) + " cols" + list(cols);
}

namespace {

// Bareiss fraction-free elimination; exact over the integers.
Integer det_bareiss(std::vector<std::vector<Integer>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return Integer(1);
    Integer prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { p = i; break; }
            if (p < 0) return Integer(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Integer(-a[n - 1][n - 1]);
}

// Cofactor expansion over column subsets: dp[mask] is the determinant of the
// submatrix formed by the first popcount(mask) rows and the columns in mask.
MultiPoly det_cofactor(const PolyMatrix& m) {
    const int n = m.rows();
    if (n == 0) return MultiPoly(1);
    if (n > 20) raise(ErrorCode::CapExceeded, "symbolic determinant size too large");
    std::vector<MultiPoly> dp(std::size_t(1) << n);
    dp[0] = MultiPoly(1);
    for (unsigned mask = 1; mask < dp.size(); ++mask) {
        int row = __builtin_popcount(mask) - 1;
        MultiPoly acc;
        int seen = 0;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            const MultiPoly& e = m.at(row, j);
            if (!e.is_zero()) {
                MultiPoly contrib = e * dp[mask & ~(1u << j)];
                if ((row + seen) % 2 == 0)
                    acc += contrib;
                else
                    acc -= contrib;
            }
            ++seen;
        }
        dp[mask] = std::move(acc);
    }
    return dp.back();
}

} // namespace

MultiPoly det(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        raise(ErrorCode::NotSquare, "determinant of a non-square matrix");
    if (m.all_integer()) {
        std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j).constant_value();
        return MultiPoly(det_bareiss(std::move(a)));
    }
    return det_cofactor(m);
}

MultiPoly minor_det(const PolyMatrix& m, const MinorSpec& spec) {
    spec.validate(m);
    return det(m.submatrix(spec.rows, spec.cols));
}

std::string TPReport::to_json() const {
    json j;
    j["order"] = order_checked;
    j["passed"] = passed;
    if (!passed) {
        json w;
        w["rows"] = witness_minor->rows;
        w["cols"] = witness_minor->cols;
        w["minor"] = witness_value->str();
        w["negative_term"] = *witness_term;
        j["witness"] = std::move(w);
    }
    return j.dump();
}

namespace {

void next_combination(std::vector<int>& c, int n, bool& done) {
    int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) {
        done = true;
        return;
    }
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
}

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k > n || k <= 0) return out;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    bool done = false;
    while (!done) {
        out.push_back(c);
        next_combination(c, n, done);
    }
    return out;
}

struct TPFailure {
    std::size_t index;
    MinorSpec spec;
    MultiPoly value;
    std::string term;
};

} // namespace

int effective_threads(int requested) {
    int cap = 0;
    if (const char* env = std::getenv("LATPOS_THREADS")) {
        cap = std::atoi(env);
        if (cap < 1) cap = 1;
    }
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    int n = requested < 1 ? hw : requested;
    if (cap > 0) n = std::min(n, cap);
    return std::max(1, n);
}

TPReport is_tp_order(const PolyMatrix& m, int r, int threads) {
    if (r < 1) raise(ErrorCode::BadArgument, "minor order must be >= 1");
    TPReport report;
    report.order_checked = r;

    // Fixed enumeration order: size ascending, then row set, then column set.
    std::vector<MinorSpec> specs;
    int maxs = std::min({r, m.rows(), m.cols()});
    for (int s = 1; s <= maxs; ++s) {
        auto rsets = combinations(m.rows(), s);
        auto csets = combinations(m.cols(), s);
        for (const auto& rs : rsets)
            for (const auto& cs : csets) specs.push_back(MinorSpec{rs, cs});
    }

    int nthreads = effective_threads(threads);
    std::vector<std::optional<TPFailure>> found(std::max(1, nthreads));

    auto worker = [&](int tid, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            MultiPoly d = det(m.submatrix(specs[i].rows, specs[i].cols));
            auto neg = d.first_negative_term();
            if (neg) {
                MultiPoly t;
                t += MultiPoly(neg->second) * [&] {
                    MultiPoly mono(1);
                    for (const auto& [v, e] : neg->first.factors)
                        mono *= MultiPoly::var(VarTable::instance().name(v), e);
                    return mono;
                }();
                if (!found[tid] || i < found[tid]->index)
                    found[tid] = TPFailure{i, specs[i], d, t.str()};
                return; // earliest failure in this chunk is enough
            }
        }
    };

    if (nthreads <= 1 || specs.size() < 32) {
        worker(0, 0, specs.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (specs.size() + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            std::size_t lo = std::min(specs.size(), t * chunk);
            std::size_t hi = std::min(specs.size(), lo + chunk);
            pool.emplace_back(worker, t, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    std::optional<TPFailure> best;
    for (auto& f : found)
        if (f && (!best || f->index < best->index)) best = f;

    if (!best) {
        report.passed = true;
    } else {
        report.passed = false;
        report.witness_minor = best->spec;
        report.witness_value = best->value;
        report.witness_term = best->term;
    }
    return report;
}

PolyMatrix toeplitz(const std::vector<MultiPoly>& seq, int size) {
    if (size < 1) raise(ErrorCode::BadArgument, "toeplitz size must be >= 1");
    PolyMatrix m(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j <= i; ++j) {
            int d = i - j;
            if (d < static_cast<int>(seq.size())) m.at(i, j) = seq[d];
        }
    return m;
}

} // namespace latpos
