#include "latpos/lgv.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

namespace latpos {

using nlohmann::json;

void PlanarNetwork::add_arc(GridPoint tail, GridPoint head, MultiPoly weight) {
    if (head.col <= tail.col)
        raise(ErrorCode::CycleDetected, "arcs must strictly increase the column coordinate");
    for (const auto& a : arcs_)
        if (a.tail == tail && a.head == head)
            raise(ErrorCode::BadParameters, "duplicate arc between a vertex pair");
    if (weight.is_zero()) return; // zero-weight steps contribute nothing
    arcs_.push_back(NetArc{tail, head, std::move(weight)});
}

void PlanarNetwork::set_sources(std::vector<GridPoint> pts, std::vector<std::string> labels) {
    sources_ = std::move(pts);
    source_labels_ = std::move(labels);
}

void PlanarNetwork::set_sinks(std::vector<GridPoint> pts, std::vector<std::string> labels) {
    sinks_ = std::move(pts);
    sink_labels_ = std::move(labels);
}

namespace {

// Index-compiled view of a network, vertices in column-major topological order.
struct Compiled {
    std::vector<GridPoint> verts;
    std::vector<std::vector<std::pair<int, const MultiPoly*>>> out; // tail -> (head, weight)
    std::vector<std::vector<std::pair<int, const MultiPoly*>>> in;  // head -> (tail, weight)

    int index(GridPoint p) const {
        auto it = std::lower_bound(verts.begin(), verts.end(), p);
        if (it == verts.end() || !(*it == p)) return -1;
        return static_cast<int>(it - verts.begin());
    }
};

Compiled compile(const PlanarNetwork& net) {
    Compiled c;
    std::set<GridPoint> vs;
    for (const auto& a : net.arcs()) {
        vs.insert(a.tail);
        vs.insert(a.head);
    }
    for (const auto& p : net.sources()) vs.insert(p);
    for (const auto& p : net.sinks()) vs.insert(p);
    c.verts.assign(vs.begin(), vs.end());
    c.out.resize(c.verts.size());
    c.in.resize(c.verts.size());
    for (const auto& a : net.arcs()) {
        int u = c.index(a.tail), v = c.index(a.head);
        c.out[u].emplace_back(v, &a.weight);
        c.in[v].emplace_back(u, &a.weight);
    }
    for (auto& l : c.out) std::sort(l.begin(), l.end());
    for (auto& l : c.in) std::sort(l.begin(), l.end());
    return c;
}

// Forward DP from one vertex; vertices are already topologically sorted.
std::vector<MultiPoly> walk_weights_from(const Compiled& c, int src) {
    std::vector<MultiPoly> w(c.verts.size());
    w[src] = MultiPoly(1);
    for (std::size_t u = static_cast<std::size_t>(src); u < c.verts.size(); ++u) {
        if (w[u].is_zero()) continue;
        for (const auto& [v, wt] : c.out[u]) w[v] += w[u] * (*wt);
    }
    return w;
}

} // namespace

void PlanarNetwork::prune_to_paths() {
    Compiled c = compile(*this);
    std::vector<char> fwd(c.verts.size(), 0), bwd(c.verts.size(), 0);
    for (const auto& s : sources_) {
        int i = c.index(s);
        if (i >= 0) fwd[i] = 1;
    }
    for (std::size_t u = 0; u < c.verts.size(); ++u)
        if (fwd[u])
            for (const auto& [v, wt] : c.out[u]) fwd[v] = 1;
    for (const auto& s : sinks_) {
        int i = c.index(s);
        if (i >= 0) bwd[i] = 1;
    }
    for (std::size_t u = c.verts.size(); u-- > 0;)
        if (bwd[u])
            for (const auto& [v, wt] : c.in[u]) bwd[v] = 1;
    std::vector<NetArc> kept;
    for (const auto& a : arcs_) {
        int u = c.index(a.tail), v = c.index(a.head);
        if (fwd[u] && bwd[v]) kept.push_back(a);
    }
    arcs_ = std::move(kept);
}

PolyMatrix walk_matrix(const PlanarNetwork& net) {
    Compiled c = compile(net);
    PolyMatrix m(static_cast<int>(net.sources().size()), static_cast<int>(net.sinks().size()));
    for (std::size_t i = 0; i < net.sources().size(); ++i) {
        int src = c.index(net.sources()[i]);
        auto w = walk_weights_from(c, src);
        for (std::size_t j = 0; j < net.sinks().size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = w[c.index(net.sinks()[j])];
    }
    return m;
}

MultiPoly total_path_weight(const PlanarNetwork& net, GridPoint from, GridPoint to) {
    Compiled c = compile(net);
    int src = c.index(from), dst = c.index(to);
    if (src < 0 || dst < 0) return MultiPoly(0);
    if (src == dst) return MultiPoly(1);
    return walk_weights_from(c, src)[dst];
}

namespace {

struct DisjointEnum {
    const Compiled& c;
    std::vector<int> srcs, snks; // vertex indices, by tuple position
    std::uint64_t cap;
    std::uint64_t visited_systems = 0;
    MultiPoly total;
    DisjointSystemStats stats;

    std::vector<char> used;
    std::vector<int> perm;
    bool identity_perm;
    int sign;

    // Extends walks one source at a time, vertices blocked as they are used.
    void extend(std::size_t level, const MultiPoly& weight) {
        if (level == srcs.size()) {
            if (++visited_systems > cap)
                raise(ErrorCode::CapExceeded, "disjoint-system enumeration exceeds cap");
            ++stats.systems;
            if (!identity_perm) ++stats.non_identity_systems;
            if (sign > 0)
                total += weight;
            else
                total -= weight;
            return;
        }
        int s = srcs[level], t = snks[perm[level]];
        if (used[s] || used[t]) return;
        walk(level, s, t, weight);
    }

    void walk(std::size_t level, int u, int target, const MultiPoly& weight) {
        used[u] = 1;
        if (u == target) {
            extend(level + 1, weight);
        } else {
            for (const auto& [v, wt] : c.out[u])
                if (!used[v]) walk(level, v, target, weight * (*wt));
        }
        used[u] = 0;
    }
};

} // namespace

MultiPoly enumerate_disjoint_systems(const PlanarNetwork& net, const std::vector<int>& rows,
                                     const std::vector<int>& cols, DisjointSystemStats* stats,
                                     std::uint64_t cap) {
    if (rows.empty() || rows.size() != cols.size())
        raise(ErrorCode::BadArgument, "need equal nonempty source/sink position lists");
    Compiled c = compile(net);
    DisjointEnum e{c, {}, {}, cap, 0, {}, {}, {}, {}, true, 1};
    for (int r : rows) {
        if (r < 0 || r >= static_cast<int>(net.sources().size()))
            raise(ErrorCode::OutOfBounds, "source position out of range");
        e.srcs.push_back(c.index(net.sources()[r]));
    }
    for (int k : cols) {
        if (k < 0 || k >= static_cast<int>(net.sinks().size()))
            raise(ErrorCode::OutOfBounds, "sink position out of range");
        e.snks.push_back(c.index(net.sinks()[k]));
    }
    e.used.assign(c.verts.size(), 0);

    const std::size_t r = rows.size();
    std::vector<int> perm(r);
    for (std::size_t i = 0; i < r; ++i) perm[i] = static_cast<int>(i);
    do {
        int sign = 1;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        e.perm = perm;
        e.sign = sign;
        e.identity_perm = std::is_sorted(perm.begin(), perm.end());
        e.extend(0, MultiPoly(1));
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (stats) *stats = e.stats;
    return e.total;
}

bool lgv_verify(const PlanarNetwork& net, const MinorSpec& spec) {
    PolyMatrix b = walk_matrix(net);
    spec.validate(b);
    MultiPoly lhs = minor_det(b, spec);
    MultiPoly rhs = enumerate_disjoint_systems(net, spec.rows, spec.cols);
    return lhs == rhs;
}

std::string PlanarNetwork::to_json() const {
    json j;
    json arr = json::array();
    for (const auto& a : arcs_) {
        json e;
        e["tail"] = {a.tail.col, a.tail.row};
        e["head"] = {a.head.col, a.head.row};
        e["weight"] = a.weight.str();
        arr.push_back(std::move(e));
    }
    j["arcs"] = std::move(arr);
    j["sources"] = source_labels_;
    j["sinks"] = sink_labels_;
    return j.dump();
}

// ---------------------------------------------------------------------------
// Digraph constructions
// ---------------------------------------------------------------------------

namespace {

std::string q_label(int j, int m) {
    return "Q_" + std::to_string(j) + "^(" + std::to_string(m) + ")";
}
std::string r_label(int j, int m) {
    return "R_" + std::to_string(j) + "^(" + std::to_string(m) + ")";
}

// Emits the single-layer digraph for the window of Ptilde, columns shifted
// by `off` (local column 1 lands at absolute column off+1).
// For t = 0 the grid gains row 0: the forward arcs may dip one row below
// the band there and climb back through the final column.
void emit_layer_tridiag(PlanarNetwork& net, int n, const TridiagParams& p, int t, int off) {
    // plain horizontal arcs
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            net.add_arc({off + i, j}, {off + i + 1, j}, MultiPoly(1));
    for (int i = 1; i <= n + 2; ++i)
        net.add_arc({off + i, n + 1}, {off + i + 1, n + 1}, MultiPoly(1));
    // lambda exits
    for (int j = 1; j <= n; ++j)
        net.add_arc({off + n + 2, j}, {off + n + 3, j}, p.lambda(n + t - j));
    // b-diagonal
    for (int i = 1; i <= n; ++i)
        net.add_arc({off + i, i}, {off + i + 1, i + 1}, p.b(n + 1 - i));
    // mu exits
    for (int j = (t == 0 ? 0 : 1); j <= n - 1; ++j)
        net.add_arc({off + n + 2, j}, {off + n + 3, j + 1}, p.mu(n + t - j));
    // alpha arcs (row shift t-1)
    for (int j = 1; j <= n + 1 - t; ++j)
        net.add_arc({off + n + 1, j}, {off + n + 2, j + t - 1}, p.alpha(n + 1 - j));
    // beta arcs (row shift t)
    for (int j = 1; j <= n - t; ++j)
        net.add_arc({off + n + 1, j}, {off + n + 2, j + t}, p.beta(n + 1 - j));
}

void emit_layer_general(PlanarNetwork& net, int n, const GeneralParams& p, int t, int off) {
    const int ell = p.ell();
    // plain horizontal arcs
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            net.add_arc({off + i, j}, {off + i + 1, j}, MultiPoly(1));
    for (int i = 1; i <= n + ell; ++i)
        net.add_arc({off + i, n + 1}, {off + i + 1, n + 1}, MultiPoly(1));
    // b-diagonal
    for (int i = 1; i <= n; ++i)
        net.add_arc({off + i, i}, {off + i + 1, i + 1}, p.b(n + 1 - i));
    // beta_1 (row shift t-1) and alpha_1 (row shift t) out of column n+1
    for (int j = 1; j <= n + 1 - t; ++j)
        net.add_arc({off + n + 1, j}, {off + n + 2, j + t - 1}, p.beta[0]);
    for (int j = 1; j <= n - t; ++j)
        net.add_arc({off + n + 1, j}, {off + n + 2, j + t}, p.alpha[0]);
    // later factor columns: beta_i horizontals, alpha_i diagonals
    for (int i = n + 2; i <= n + ell; ++i) {
        for (int j = (t == 0 ? 0 : 1); j <= n; ++j)
            net.add_arc({off + i, j}, {off + i + 1, j}, p.beta[static_cast<std::size_t>(i - n - 1)]);
        for (int j = (t == 0 ? 0 : 1); j <= n - 1; ++j)
            net.add_arc({off + i, j}, {off + i + 1, j + 1},
                        p.alpha[static_cast<std::size_t>(i - n - 1)]);
    }
}

int layer_width(GammaVariant v, int m, int ell) {
    return v == GammaVariant::tridiag ? m + 3 : m + ell + 1;
}

// Geometry of the glued network: boundary(m) is the absolute column carrying
// the Q^(m) labels; layer m spans boundary(m)..boundary(m-1).
struct StarGeometry {
    int n = 0;
    std::vector<int> boundary; // index m in 0..n

    GridPoint Q(int j, int m) const { return {boundary[static_cast<std::size_t>(m)], j + 1}; }
    GridPoint R(int j, int m) const { return {boundary[static_cast<std::size_t>(m)] + j, j + 1}; }
};

template <typename Params>
void emit_layer(PlanarNetwork& net, int n, const Params& p, int t, int off);

template <>
void emit_layer<TridiagParams>(PlanarNetwork& net, int n, const TridiagParams& p, int t, int off) {
    emit_layer_tridiag(net, n, p, t, off);
}
template <>
void emit_layer<GeneralParams>(PlanarNetwork& net, int n, const GeneralParams& p, int t, int off) {
    emit_layer_general(net, n, p, t, off);
}

template <typename Params>
StarGeometry star_geometry(int n, const Params& p, GammaVariant variant) {
    StarGeometry g;
    g.n = n;
    g.boundary.resize(static_cast<std::size_t>(n) + 1);
    int ell = 0;
    if constexpr (std::is_same_v<Params, GeneralParams>) ell = p.ell();
    g.boundary[static_cast<std::size_t>(n)] = 0;
    for (int m = n; m >= 1; --m)
        g.boundary[static_cast<std::size_t>(m - 1)] =
            g.boundary[static_cast<std::size_t>(m)] + layer_width(variant, m, ell) - 1;
    return g;
}

template <typename Params>
std::pair<PlanarNetwork, StarGeometry> build_star(int n, const Params& p, int t,
                                                  GammaVariant variant) {
    if (n < 0) raise(ErrorCode::BadParameters, "layer count must be nonnegative");
    PlanarNetwork net;
    StarGeometry g = star_geometry(n, p, variant);
    for (int m = n; m >= 1; --m)
        emit_layer<Params>(net, m, p, t, g.boundary[static_cast<std::size_t>(m)] - 1);
    // weight-1 chains gluing the tops of the smaller layers
    for (int m = 2; m <= n; ++m)
        for (int i = 0; i <= m - 2; ++i)
            net.add_arc(g.Q(m, i + 1), g.Q(m, i), MultiPoly(1));
    std::vector<GridPoint> srcs, snks;
    std::vector<std::string> slab, tlab;
    for (int j = n; j >= 0; --j) {
        srcs.push_back(g.Q(j, n));
        slab.push_back(q_label(j, n));
        snks.push_back(g.Q(j, 0));
        tlab.push_back(q_label(j, 0));
    }
    net.set_sources(std::move(srcs), std::move(slab));
    net.set_sinks(std::move(snks), std::move(tlab));
    return {std::move(net), std::move(g)};
}

template <typename Params>
PlanarNetwork build_diamond(int n, int k, const Params& p, int t, GammaVariant variant) {
    if (t < 1) raise(ErrorCode::BadParameters, "row-Toeplitz networks need t >= 1");
    if (n < 0 || k < 0) raise(ErrorCode::BadParameters, "need n, k >= 0");
    auto [net, g] = build_star<Params>(n + k, p, t, variant);
    std::vector<GridPoint> srcs, snks;
    std::vector<std::string> slab, tlab;
    for (int i = 0; i <= k; ++i) {
        srcs.push_back(g.Q(i, n + i));
        slab.push_back(q_label(i, n + i));
    }
    for (int j = 0; j <= k; ++j) {
        snks.push_back(g.Q(n + j, 0));
        tlab.push_back(q_label(n + j, 0));
    }
    net.set_sources(std::move(srcs), std::move(slab));
    net.set_sinks(std::move(snks), std::move(tlab));
    net.prune_to_paths();
    return std::move(net);
}

} // namespace

PlanarNetwork build_gamma_tridiag(int n, const TridiagParams& params, int t) {
    if (n < 1) raise(ErrorCode::BadParameters, "layer index must be >= 1");
    if (t < 0) raise(ErrorCode::BadParameters, "t must be nonnegative");
    PlanarNetwork net;
    emit_layer_tridiag(net, n, params, t, 0);
    std::vector<GridPoint> srcs, snks;
    std::vector<std::string> slab, tlab;
    for (int j = n; j >= 0; --j) {
        srcs.push_back({1, j + 1});
        slab.push_back(q_label(j, n));
        snks.push_back({n + 3, j + 1});
        tlab.push_back(q_label(j, n - 1));
    }
    net.set_sources(std::move(srcs), std::move(slab));
    net.set_sinks(std::move(snks), std::move(tlab));
    return net;
}

PlanarNetwork build_gamma_general(int n, const GeneralParams& params, int t) {
    if (n < 1) raise(ErrorCode::BadParameters, "layer index must be >= 1");
    if (t < 0) raise(ErrorCode::BadParameters, "t must be nonnegative");
    if (params.ell() < 1 || params.alpha.size() != params.beta.size())
        raise(ErrorCode::BadParameters, "need matching nonempty alpha/beta factor lists");
    PlanarNetwork net;
    emit_layer_general(net, n, params, t, 0);
    const int w = n + params.ell() + 1;
    std::vector<GridPoint> srcs, snks;
    std::vector<std::string> slab, tlab;
    for (int j = n; j >= 0; --j) {
        srcs.push_back({1, j + 1});
        slab.push_back(q_label(j, n));
        snks.push_back({w, j + 1});
        tlab.push_back(q_label(j, n - 1));
    }
    net.set_sources(std::move(srcs), std::move(slab));
    net.set_sinks(std::move(snks), std::move(tlab));
    return net;
}

PlanarNetwork build_gamma_star(int n, const TridiagParams& params, int t) {
    if (t < 1)
        raise(ErrorCode::BadParameters,
              "the glued network realizes the row decomposition, which needs t >= 1");
    return build_star<TridiagParams>(n, params, t, GammaVariant::tridiag).first;
}

PlanarNetwork build_gamma_star(int n, const GeneralParams& params, int t) {
    if (t < 1)
        raise(ErrorCode::BadParameters,
              "the glued network realizes the row decomposition, which needs t >= 1");
    if (params.ell() < 1 || params.alpha.size() != params.beta.size())
        raise(ErrorCode::BadParameters, "need matching nonempty alpha/beta factor lists");
    return build_star<GeneralParams>(n, params, t, GammaVariant::general_ell).first;
}

PlanarNetwork build_gamma_diamond(int n, int k, const TridiagParams& params, int t) {
    return build_diamond<TridiagParams>(n, k, params, t, GammaVariant::tridiag);
}

PlanarNetwork build_gamma_diamond(int n, int k, const GeneralParams& params, int t) {
    return build_diamond<GeneralParams>(n, k, params, t, GammaVariant::general_ell);
}

PlanarNetwork build_gamma_circ(int m, int n, int k, int delta, int sigma,
                               const GeneralParams& params, int t) {
    if (t < 1) raise(ErrorCode::BadParameters, "skew-diagonal networks need t >= 1");
    if (params.b.kind() != "constant")
        raise(ErrorCode::BadParameters, "skew-diagonal networks need a constant vertical weight");
    if (m < 0 || k < 0 || k > n || delta <= 0 || sigma <= std::max(k, delta))
        raise(ErrorCode::BadParameters,
              "need m >= 0, 0 <= k <= n, 0 < delta, max(k, delta) < sigma");
    auto [net, g] = build_star<GeneralParams>(n + m * sigma, params, t, GammaVariant::general_ell);
    std::vector<GridPoint> srcs, snks;
    std::vector<std::string> slab, tlab;
    for (int i = 0; i <= m; ++i) {
        srcs.push_back(g.R((sigma - delta) * i, n + i * sigma));
        slab.push_back(r_label((sigma - delta) * i, n + i * sigma));
    }
    for (int j = 0; j <= m; ++j) {
        snks.push_back(g.R(n - k + (sigma - delta) * j, n - k + j * sigma));
        tlab.push_back(r_label(n - k + (sigma - delta) * j, n - k + j * sigma));
    }
    net.set_sources(std::move(srcs), std::move(slab));
    net.set_sinks(std::move(snks), std::move(tlab));
    net.prune_to_paths();
    return std::move(net);
}

MultiPoly gamma_star_diag_path_weight(int n, const GeneralParams& params, int t, int a, int d,
                                      int b, int c) {
    if (n < 1 || a < 0 || b < 0 || c < 0 || d < 0 || a > d || b > c || d > n || c > n)
        raise(ErrorCode::BadParameters, "need 0 <= a <= d <= n and 0 <= b <= c <= n");
    auto [net, g] = build_star<GeneralParams>(n, params, t, GammaVariant::general_ell);
    return total_path_weight(net, g.R(a, d), g.R(b, c));
}

} // namespace latpos
