#ifndef TEMPO_GRAPH_HPP
#define TEMPO_GRAPH_HPP

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tempo {

// Unordered vertex pair, normalized so first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    if (u == v)
        throw std::invalid_argument("self-loop " + std::to_string(u));
    if (u > v)
        std::swap(u, v);
    return {u, v};
}

// Simple undirected graph on vertices 0..n-1. Edges are kept sorted and
// deduplicated; isolated vertices are allowed (n may exceed the highest
// endpoint).
struct StaticGraph {
    int n = 0;
    std::vector<Edge> edges;

    StaticGraph() = default;

    StaticGraph(int n_, std::vector<Edge> es) : n(n_), edges(std::move(es)) {
        if (n < 0)
            throw std::invalid_argument("negative vertex count");
        for (auto& [u, v] : edges) {
            if (u > v)
                std::swap(u, v);
            if (u == v)
                throw std::invalid_argument("self-loop");
            if (u < 0 || v >= n)
                throw std::invalid_argument("edge endpoint out of range");
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }

    bool has_edge(int u, int v) const {
        if (u == v)
            return false;
        Edge e = make_edge(u, v);
        return std::binary_search(edges.begin(), edges.end(), e);
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(n);
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        return adj;
    }

    friend bool operator==(const StaticGraph&, const StaticGraph&) = default;
};

inline StaticGraph graph_union(const StaticGraph& a, const StaticGraph& b) {
    if (a.n != b.n)
        throw std::invalid_argument("union of graphs with different vertex counts");
    std::vector<Edge> es = a.edges;
    es.insert(es.end(), b.edges.begin(), b.edges.end());
    return StaticGraph(a.n, std::move(es));
}

// Fixed vertex set, one edge set per time step 1..T. T >= 1.
struct TemporalGraph {
    int n = 0;
    std::vector<StaticGraph> snapshots;  // snapshots[t-1] is G_t

    TemporalGraph() = default;

    TemporalGraph(int n_, std::vector<std::vector<Edge>> per_time) : n(n_) {
        if (per_time.empty())
            throw std::invalid_argument("lifetime must be at least 1");
        snapshots.reserve(per_time.size());
        for (auto& es : per_time)
            snapshots.emplace_back(n, std::move(es));
    }

    int lifetime() const { return static_cast<int>(snapshots.size()); }

    friend bool operator==(const TemporalGraph&, const TemporalGraph&) = default;
};

inline const StaticGraph& snapshot(const TemporalGraph& g, int i) {
    if (i < 1 || i > g.lifetime())
        throw std::out_of_range("snapshot index " + std::to_string(i));
    return g.snapshots[i - 1];
}

// Union of E_{i-radius}..E_{i+radius}, clipped to [1,T]. Out-of-range
// snapshots are treated as edgeless, so radius 1 at the boundaries gives
// G_1 u G_2 and G_{T-1} u G_T.
inline StaticGraph smash(const TemporalGraph& g, int i, int radius) {
    if (i < 1 || i > g.lifetime())
        throw std::out_of_range("smash index " + std::to_string(i));
    if (radius < 0)
        throw std::invalid_argument("negative smash radius");
    int lo = std::max(1, i - radius);
    int hi = std::min(g.lifetime(), i + radius);
    std::vector<Edge> es;
    for (int t = lo; t <= hi; ++t) {
        const auto& snap = g.snapshots[t - 1].edges;
        es.insert(es.end(), snap.begin(), snap.end());
    }
    return StaticGraph(g.n, std::move(es));
}

// Max over consecutive steps of edges added and of edges removed.
inline int grow_pace(const TemporalGraph& g) {
    int pace = 0;
    for (int i = 1; i < g.lifetime(); ++i) {
        const auto& a = g.snapshots[i - 1].edges;
        const auto& b = g.snapshots[i].edges;
        std::vector<Edge> diff;
        std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(diff));
        pace = std::max(pace, static_cast<int>(diff.size()));
        diff.clear();
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
        pace = std::max(pace, static_cast<int>(diff.size()));
    }
    return pace;
}

inline int max_degree(const StaticGraph& s) {
    std::vector<int> deg(s.n, 0);
    for (auto [u, v] : s.edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

struct Bipartition {
    std::vector<int> left, right;
};

// BFS 2-coloring per connected component; smallest-index vertex of each
// component goes to the left part.
inline std::optional<Bipartition> is_bipartite(const StaticGraph& s) {
    auto adj = s.adjacency();
    std::vector<int> side(s.n, -1);
    for (int start = 0; start < s.n; ++start) {
        if (side[start] != -1)
            continue;
        side[start] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    q.push(v);
                } else if (side[v] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition p;
    for (int v = 0; v < s.n; ++v)
        (side[v] == 0 ? p.left : p.right).push_back(v);
    return p;
}

struct DegeneracyResult {
    int d = 0;
    std::vector<int> ordering;  // each vertex has <= d neighbors later on
};

// Iterated minimum-degree removal; ties broken by smallest vertex index.
inline DegeneracyResult degeneracy(const StaticGraph& s) {
    auto adj = s.adjacency();
    std::vector<int> deg(s.n);
    std::vector<bool> removed(s.n, false);
    for (int v = 0; v < s.n; ++v)
        deg[v] = static_cast<int>(adj[v].size());
    DegeneracyResult res;
    res.ordering.reserve(s.n);
    for (int step = 0; step < s.n; ++step) {
        int best = -1;
        for (int v = 0; v < s.n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best]))
                best = v;
        res.d = std::max(res.d, deg[best]);
        res.ordering.push_back(best);
        removed[best] = true;
        for (int w : adj[best])
            if (!removed[w])
                --deg[w];
    }
    return res;
}

}  // namespace tempo

#endif
