#ifndef LATPOS_LGV_HPP
#define LATPOS_LGV_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "latpos/matrix.hpp"
#include "latpos/scheme.hpp"

namespace latpos {

struct GridPoint {
    int col = 0;
    int row = 0;
    bool operator==(const GridPoint& o) const { return col == o.col && row == o.row; }
    bool operator<(const GridPoint& o) const {
        return col != o.col ? col < o.col : row < o.row;
    }
};

struct NetArc {
    GridPoint tail, head;
    MultiPoly weight;
};

// Weighted acyclic digraph on grid points with ordered source/sink lists.
// Every arc strictly increases the column coordinate, and there is at most
// one arc per ordered vertex pair.
class PlanarNetwork {
public:
    void add_arc(GridPoint tail, GridPoint head, MultiPoly weight);
    void set_sources(std::vector<GridPoint> pts, std::vector<std::string> labels);
    void set_sinks(std::vector<GridPoint> pts, std::vector<std::string> labels);

    const std::vector<NetArc>& arcs() const { return arcs_; }
    const std::vector<GridPoint>& sources() const { return sources_; }
    const std::vector<GridPoint>& sinks() const { return sinks_; }
    const std::vector<std::string>& source_labels() const { return source_labels_; }
    const std::vector<std::string>& sink_labels() const { return sink_labels_; }

    // Drops arcs that lie on no directed source-to-sink path.
    void prune_to_paths();

    std::string to_json() const;

private:
    std::vector<NetArc> arcs_;
    std::vector<GridPoint> sources_, sinks_;
    std::vector<std::string> source_labels_, sink_labels_;
};

// Walk matrix: entry (i,j) = total weight of walks source_i -> sink_j.
PolyMatrix walk_matrix(const PlanarNetwork& net);

// Total weight of directed paths between two vertices.
MultiPoly total_path_weight(const PlanarNetwork& net, GridPoint from, GridPoint to);

struct DisjointSystemStats {
    std::uint64_t systems = 0;             // vertex-disjoint systems found
    std::uint64_t non_identity_systems = 0; // those with a non-identity matching
};

// Signed sum over vertex-disjoint walk systems connecting the selected
// sources and sinks (positions into the network's source/sink lists).
MultiPoly enumerate_disjoint_systems(const PlanarNetwork& net, const std::vector<int>& rows,
                                     const std::vector<int>& cols,
                                     DisjointSystemStats* stats = nullptr,
                                     std::uint64_t cap = 10'000'000);

// Checks minor(walk matrix, spec) == the signed disjoint-system sum.
bool lgv_verify(const PlanarNetwork& net, const MinorSpec& spec);

// Parameters for the tridiagonal construction (factored weights
// a^(0) = alpha*lambda, a^(1) = alpha*mu + beta*lambda', a^(2) = beta*mu').
struct TridiagParams {
    WeightRule alpha, beta, lambda, mu, b;
};

// Parameters for the general-bandwidth construction: constant factor pairs
// (alpha_j, beta_j), j = 1..ell, with an arbitrary vertical weight table.
struct GeneralParams {
    std::vector<MultiPoly> alpha, beta;
    WeightRule b;
    int ell() const { return static_cast<int>(alpha.size()); }
};

enum class GammaVariant { tridiag, general_ell };

// Single-layer network whose walk matrix is the (n+1)-window of Ptilde.
PlanarNetwork build_gamma_tridiag(int n, const TridiagParams& params, int t);
PlanarNetwork build_gamma_general(int n, const GeneralParams& params, int t);

// Glued network whose walk matrix is the (n+1)-window of M (t >= 1;
// the gluing identity is the row decomposition, which needs t >= 1).
PlanarNetwork build_gamma_star(int n, const TridiagParams& params, int t);
PlanarNetwork build_gamma_star(int n, const GeneralParams& params, int t);

// Subnetwork whose walk matrix is the order-(k+1) leading window of the
// Toeplitz matrix of row n of M; requires t >= 1.
PlanarNetwork build_gamma_diamond(int n, int k, const TridiagParams& params, int t);
PlanarNetwork build_gamma_diamond(int n, int k, const GeneralParams& params, int t);

// Subnetwork whose walk matrix is the order-(m+1) leading window of the
// Toeplitz matrix of the skew diagonal (M_{n+delta i, k+sigma i})_i;
// requires constant b, t >= 1, 0 <= k <= n, 0 < delta, max(k,delta) < sigma.
PlanarNetwork build_gamma_circ(int m, int n, int k, int delta, int sigma,
                               const GeneralParams& params, int t);

// Diagonal-vertex path weight inside the glued general network:
// the total weight from R_a^(d) to R_b^(c) (the structural claim says this
// equals M_{b+d-a-c, d-c} for constant-b schemes).
MultiPoly gamma_star_diag_path_weight(int n, const GeneralParams& params, int t, int a, int d,
                                      int b, int c);

} // namespace latpos

#endif
