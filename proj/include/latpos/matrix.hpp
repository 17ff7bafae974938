#ifndef LATPOS_MATRIX_HPP
#define LATPOS_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "latpos/poly.hpp"

namespace latpos {

// Rectangular matrix over MultiPoly.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) raise(ErrorCode::BadArgument, "negative matrix shape");
    }

    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const MultiPoly& at(int r, int c) const {
        check(r, c);
        return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }
    MultiPoly& at(int r, int c) {
        check(r, c);
        return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }

    PolyMatrix operator*(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
    PolyMatrix leading_principal(int n) const;
    PolyMatrix transposed() const;
    bool all_integer() const;

    std::string to_csv() const;
    std::string to_json() const;

private:
    int rows_, cols_;
    std::vector<MultiPoly> entries_;

    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            raise(ErrorCode::OutOfBounds, "matrix index (" + std::to_string(r) + "," +
                                              std::to_string(c) + ") out of bounds for " +
                                              std::to_string(rows_) + "x" + std::to_string(cols_));
    }
};

// Row/column selection for a minor: strictly increasing index lists of equal length.
struct MinorSpec {
    std::vector<int> rows;
    std::vector<int> cols;

    void validate(const PolyMatrix& m) const;
    std::string str() const;
};

// Exact determinant. Fraction-free Bareiss elimination when every entry is an
// integer constant, cofactor expansion with column-subset memoization otherwise.
MultiPoly det(const PolyMatrix& m);
MultiPoly minor_det(const PolyMatrix& m, const MinorSpec& spec);

// Outcome of an x-total-positivity-of-order-r check.
struct TPReport {
    int order_checked = 0;
    bool passed = false;
    std::optional<MinorSpec> witness_minor;
    std::optional<MultiPoly> witness_value;   // the offending minor
    std::optional<std::string> witness_term;  // its first negative term, rendered

    std::string to_json() const;
};

// Checks every minor of order <= r for nonnegative coefficients.
// `threads` <= 1 runs sequentially; the reported witness is the
// lexicographically smallest failure regardless of thread count.
TPReport is_tp_order(const PolyMatrix& m, int r, int threads = 1);

// Toeplitz matrix of a (finite) sequence: entry (i,j) = seq[i-j], zero outside.
PolyMatrix toeplitz(const std::vector<MultiPoly>& seq, int size);

// Resolves a thread-count request against the LATPOS_THREADS environment cap.
int effective_threads(int requested);

} // namespace latpos

#endif
