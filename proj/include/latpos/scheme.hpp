#ifndef LATPOS_SCHEME_HPP
#define LATPOS_SCHEME_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "latpos/poly.hpp"

namespace latpos {

// Total weight table: index -> polynomial. Backed by a constant, an explicit
// finite table, a polynomial rule in the index, an indexed symbolic family,
// or an arbitrary function (catalog internals).
class WeightRule {
public:
    WeightRule() : kind_("constant") {}

    static WeightRule constant(MultiPoly value);
    static WeightRule table(std::vector<MultiPoly> values);
    // `expr` evaluated with `index_var` substituted by the query index.
    static WeightRule poly_in_index(MultiPoly expr, std::string index_var = "n");
    // index i -> the indeterminate `prefix + i` (e.g. "x" -> x0, x1, ...).
    static WeightRule indexed(std::string prefix);
    static WeightRule fn(std::function<MultiPoly(int)> f, std::string description);

    // Evaluates at `idx` (>= 0); raises InvalidWeight if the value has a
    // negative coefficient, BadArgument past the end of a finite table.
    MultiPoly operator()(int idx) const;

    // Serializable kinds: "constant", "table", "poly_in_n".
    const std::string& kind() const { return kind_; }
    std::string describe() const;

private:
    std::string kind_;
    MultiPoly value_;
    std::vector<MultiPoly> values_;
    std::string aux_;
    std::function<MultiPoly(int)> fn_;
};

// The lattice-path weight model: steps (0,1) with weight b_n and (1,t+i)
// with weight a_n^(i), 0 <= i <= ell. Single source of truth for every
// construction in the library.
struct WeightScheme {
    int t = 0;
    int ell = 0;
    std::vector<WeightRule> a; // size ell+1; a[i] is the table n -> a_n^(i)
    WeightRule b;
    std::vector<std::string> vars; // declared indeterminates, for reports

    void validate() const;

    MultiPoly a_weight(int n, int i) const;
    MultiPoly b_weight(int n) const;

    // True when every a-rule is a constant polynomial (b may still vary).
    bool constant_a() const;
    bool constant_b() const;

    std::string to_json() const;
    static WeightScheme from_json(const std::string& text);
};

} // namespace latpos

#endif
