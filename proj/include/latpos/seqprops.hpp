#ifndef LATPOS_SEQPROPS_HPP
#define LATPOS_SEQPROPS_HPP

#include <string>
#include <vector>

#include "latpos/matrix.hpp"
#include "latpos/pathmodel.hpp"
#include "latpos/riordan.hpp"

namespace latpos {

struct PolySequence {
    std::vector<MultiPoly> terms;
    std::string origin;

    bool all_integer() const {
        for (const auto& t : terms)
            if (!t.is_constant()) return false;
        return true;
    }
    std::vector<Integer> integer_terms() const;
};

struct Extraction {
    enum class What { row, column, diagonal } what;
    int n = 0, k = 0, delta = 0, sigma = 0;

    static Extraction row(int n) { return {What::row, n, 0, 0, 0}; }
    static Extraction column(int k) { return {What::column, 0, k, 0, 0}; }
    static Extraction diagonal(int n, int k, int delta, int sigma) {
        return {What::diagonal, n, k, delta, sigma};
    }
};

// Row / column / skew-diagonal slice of a truncation. Diagonal extraction
// enforces 0 <= k <= n, 0 < delta, max(k,delta) < sigma.
PolySequence extract(const TriangleTruncation& tri, const Extraction& e, int count);

// a -> (a_0^2, a_1^2 - a_0 a_2, a_2^2 - a_1 a_3, ...), out-of-range terms 0.
PolySequence L_operator(const PolySequence& s);

struct LogConcavityReport {
    bool passed = false;
    int failed_iteration = 0; // 1-based; 0 when passed
};

// Applies the L operator r times to an integer sequence; passes when every
// iterate is entrywise nonnegative.
LogConcavityReport is_r_log_concave(const PolySequence& s, int r);

// Toeplitz window TP test at the given order.
TPReport is_polya_frequency_finite(const PolySequence& s, int window, int order);

// Exact decision: does sum_k s_k z^k have only real, non-positive zeros?
// Sturm counts over the rationals; a zero root counts as non-positive.
bool pf_via_real_roots(const PolySequence& s);

struct ToeplitzWitness {
    MinorSpec spec; // within a window of the stated size
    int window = 0;
    MultiPoly value;
};

// Escalating search for a negative contiguous minor of the Toeplitz matrix
// of a finite integer sequence. A fixed window/order budget cannot decide
// the property ((1,3,3) first fails at a 6x6 minor in a 7-window), so the
// not-PF direction exhibits an explicit witness instead.
std::optional<ToeplitzWitness> find_negative_toeplitz_minor(const PolySequence& s,
                                                            int max_order);

// Log-concavity iterates for a prefix of an infinite sequence: iterate i is
// only meaningful on indices 0..len-1-i, so the checked window shrinks.
LogConcavityReport is_r_log_concave_prefix(const PolySequence& s, int r);

struct Prop19Report {
    bool matrix_tp = false;
    bool columns_ok = false;
    bool rows_ok = false;      // vacuously true when t = 0
    bool diagonals_ok = false; // vacuously true when t = 0
    bool passed = false;

    std::string to_json() const;
};

// For a constant scheme whose a-polynomial has only non-positive real zeros
// and gamma >= 0: M truncation TP, every column (and row / skew diagonal for
// t >= 1) is PF and r-log-concave up to the given budgets.
Prop19Report check_prop_1_9(const ConstantScheme& cs, int window, int order, int r_iters);

std::string sequence_report_json(const PolySequence& s, int window, int order, int r_iters);

} // namespace latpos

#endif
