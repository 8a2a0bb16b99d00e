#ifndef TEMPO_REDUCTION_HPP
#define TEMPO_REDUCTION_HPP

#include "tempo/exact.hpp"

namespace tempo {

// Layered static graph on n*T vertices whose chromatic number equals the
// temporal chromatic number. Flat id of (v, t) is (t-1)*n + v.
struct StaticReduction {
    StaticGraph graph;
    int n = 0;
    int T = 0;

    int flat(int v, int t) const { return (t - 1) * n + v; }
    std::pair<int, int> unflat(int id) const { return {id % n, id / n + 1}; }
};

inline StaticReduction to_static(const TemporalGraph& g) {
    StaticReduction r;
    r.n = g.n;
    r.T = g.lifetime();
    std::vector<Edge> es;
    // E': same-layer edges from the radius-1 smash.
    for (int i = 1; i <= r.T; ++i)
        for (auto [u, v] : smash(g, i, 1).edges)
            es.emplace_back(r.flat(u, i), r.flat(v, i));
    // E'': cross-layer edges from compatibility, both orientations.
    for (int i = 1; i < r.T; ++i) {
        StaticGraph pair = graph_union(snapshot(g, i), snapshot(g, i + 1));
        for (auto [u, v] : pair.edges) {
            es.emplace_back(r.flat(u, i), r.flat(v, i + 1));
            es.emplace_back(r.flat(v, i), r.flat(u, i + 1));
        }
    }
    r.graph = StaticGraph(r.n * r.T, std::move(es));
    return r;
}

// Exact temporal chromatic number via the static reduction.
inline int chi_temporal(const TemporalGraph& g, const SearchConfig& cfg = {}) {
    return chi_static(to_static(g).graph, cfg);
}

// Interval-contraction graph for temporal 2-colorability. One node per
// (vertex, color-change opportunity): time 1 always, plus every t where
// the vertex is isolated in both G_{t-1} and G_t. The node owns the
// interval [t, next opportunity).
struct Col2Reduction {
    StaticGraph graph;
    std::vector<std::pair<int, int>> nodes;       // (v, t) per node id
    std::vector<std::pair<int, int>> intervals;   // [begin, end) per node id

    // Node id covering time t for vertex v.
    int node_at(int v, int t) const {
        for (size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].first == v && intervals[i].first <= t && t < intervals[i].second)
                return static_cast<int>(i);
        throw std::logic_error("uncovered (vertex, time)");
    }
};

inline Col2Reduction to_col2(const TemporalGraph& g) {
    int T = g.lifetime();
    std::vector<std::vector<bool>> isolated(g.n, std::vector<bool>(T + 1, true));
    for (int t = 1; t <= T; ++t)
        for (auto [u, v] : snapshot(g, t).edges) {
            isolated[u][t] = false;
            isolated[v][t] = false;
        }
    Col2Reduction r;
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> times{1};
        for (int t = 2; t <= T; ++t)
            if (isolated[v][t] && isolated[v][t - 1])
                times.push_back(t);
        for (size_t i = 0; i < times.size(); ++i) {
            int end = (i + 1 < times.size()) ? times[i + 1] : T + 1;
            r.nodes.emplace_back(v, times[i]);
            r.intervals.emplace_back(times[i], end);
        }
    }
    std::vector<Edge> es;
    int m = static_cast<int>(r.nodes.size());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            int u = r.nodes[a].first, v = r.nodes[b].first;
            if (u == v)
                continue;
            int lo = std::max(r.intervals[a].first, r.intervals[b].first);
            int hi = std::min(r.intervals[a].second, r.intervals[b].second);
            for (int t = lo; t < hi; ++t)
                if (snapshot(g, t).has_edge(u, v)) {
                    es.emplace_back(a, b);
                    break;
                }
        }
    r.graph = StaticGraph(m, std::move(es));
    return r;
}

struct TwoColorable {
    bool yes = false;
    std::optional<ColoringSeq> witness;
};

// Temporal 2-colorability: col(G) bipartite, with the witness coloring
// read back off the bipartition (each node keeps its side's color for
// its whole interval).
inline TwoColorable decide_2colorable(const TemporalGraph& g) {
    Col2Reduction r = to_col2(g);
    auto part = is_bipartite(r.graph);
    if (!part)
        return {false, std::nullopt};
    std::vector<int> node_color(r.nodes.size(), 0);
    for (int v : part->right)
        node_color[v] = 1;
    ColoringSeq seq;
    seq.palette_size = 2;
    int T = g.lifetime();
    seq.per_time.assign(T, Coloring(g.n, 0));
    for (size_t id = 0; id < r.nodes.size(); ++id) {
        auto [v, t0] = r.nodes[id];
        auto [lo, hi] = r.intervals[id];
        for (int t = lo; t < hi; ++t)
            seq.per_time[t - 1][v] = node_color[id];
    }
    return {true, seq};
}

}  // namespace tempo

#endif
