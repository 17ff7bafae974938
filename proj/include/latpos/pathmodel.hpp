#ifndef LATPOS_PATHMODEL_HPP
#define LATPOS_PATHMODEL_HPP

#include <cstdint>
#include <vector>

#include "latpos/matrix.hpp"
#include "latpos/scheme.hpp"

namespace latpos {

// One step of a lattice path: vertical (0,1) or slanted (1,t+i).
struct PathStep {
    bool vertical;
    int i;              // slant index, 0..ell (unused for vertical steps)
    int landing_height; // height after the step
};

struct LatticePath {
    std::vector<PathStep> steps;
};

enum class Orientation { M, T };

// Rectangular truncation of M (row-recursive) or T (column-recursive).
struct TriangleTruncation {
    PolyMatrix entries; // (N+1) x (K+1)
    WeightScheme scheme;
    Orientation orientation = Orientation::M;
};

inline constexpr std::uint64_t kDefaultPathCap = 1'000'000;

// Every path from (0,0) to (k,n), each with its weight.
// Refuses instances whose path count exceeds `cap`.
std::vector<std::pair<LatticePath, MultiPoly>>
enumerate_paths(const WeightScheme& scheme, int k, int n,
                std::uint64_t cap = kDefaultPathCap);

// Brute-force reference value: the sum of all path weights.
MultiPoly matrix_entry_oracle(const WeightScheme& scheme, int n, int k,
                              std::uint64_t cap = kDefaultPathCap);

// Row recurrence: M_{n,k} = sum_i a_n^(i) M_{n-t-i,k-1} + b_n M_{n-1,k}.
TriangleTruncation build_matrix_rec1(const WeightScheme& scheme, int N, int K);

// Independent column-to-column recurrence for the same matrix.
TriangleTruncation build_matrix_rec2(const WeightScheme& scheme, int N, int K);

// The k-recursive transpose family:
// T_{n,k} = sum_i a_k^(i) T_{n-1,k-t-i} + b_k T_{n,k-1}.
// Weight tables are read with the index swap a_n -> a_k, b_n -> b_k.
TriangleTruncation build_transpose_rec(const WeightScheme& scheme, int N, int K);

} // namespace latpos

#endif
