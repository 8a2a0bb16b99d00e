#ifndef TEMPO_GADGETS_HPP
#define TEMPO_GADGETS_HPP

#include <functional>
#include <map>

#include "tempo/coloring.hpp"
#include "tempo/graph.hpp"

namespace tempo {

enum class SnapshotClass { none, path, bipartite, degree_bounded, degenerate };

struct GadgetClaim {
    std::optional<int> chi_t;                       // claimed temporal chromatic number
    std::optional<std::pair<int, int>> smash_clique;  // smash(.,i,1) is K_size
    SnapshotClass snapshot_class = SnapshotClass::none;
    int class_param = 0;
    std::optional<int> pace;
};

// A lower-bound instance bundled with its claimed certificate. The
// structural part of the claim is re-checked by self_check(); chromatic
// claims are for the exact solvers to reproduce.
struct GadgetInstance {
    std::string name;
    TemporalGraph graph;
    GadgetClaim claim;
    std::vector<std::string> vertex_names;
    std::map<std::string, std::pair<int, Coloring>> fixed_colorings;  // name -> (time, c)
    std::vector<std::pair<int, StaticGraph>> exact_smashes;  // smash(.,i,1) must equal

    void self_check() const;
};

namespace detail {

inline bool is_path_graph(const StaticGraph& s) {
    if (s.n == 0)
        return false;
    if (static_cast<int>(s.edges.size()) != s.n - 1 || max_degree(s) > 2)
        return false;
    // connected?
    auto adj = s.adjacency();
    std::vector<bool> seen(s.n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = true;
                ++count;
                stack.push_back(u);
            }
    }
    return count == s.n;
}

inline void add_clique(std::vector<Edge>& es, const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            es.push_back(make_edge(vs[i], vs[j]));
}

inline void add_bipartite(std::vector<Edge>& es, const std::vector<int>& a,
                          const std::vector<int>& b) {
    for (int u : a)
        for (int v : b)
            es.push_back(make_edge(u, v));
}

inline void add_path(std::vector<Edge>& es, const std::vector<int>& vs) {
    for (size_t i = 0; i + 1 < vs.size(); ++i)
        es.push_back(make_edge(vs[i], vs[i + 1]));
}

inline StaticGraph complete_graph(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            es.emplace_back(u, v);
    return StaticGraph(n, std::move(es));
}

}  // namespace detail

inline void GadgetInstance::self_check() const {
    auto fail = [&](const std::string& what) {
        throw std::logic_error("gadget " + name + " self-check failed: " + what);
    };
    for (int i = 1; i <= graph.lifetime(); ++i) {
        const StaticGraph& s = snapshot(graph, i);
        switch (claim.snapshot_class) {
            case SnapshotClass::path:
                if (!detail::is_path_graph(s))
                    fail("snapshot " + std::to_string(i) + " is not a path");
                break;
            case SnapshotClass::bipartite:
                if (!is_bipartite(s))
                    fail("snapshot " + std::to_string(i) + " is not bipartite");
                break;
            case SnapshotClass::degree_bounded:
                if (max_degree(s) != claim.class_param)
                    fail("snapshot " + std::to_string(i) + " max degree off");
                break;
            case SnapshotClass::degenerate:
                if (degeneracy(s).d != claim.class_param)
                    fail("snapshot " + std::to_string(i) + " degeneracy off");
                break;
            case SnapshotClass::none:
                break;
        }
    }
    if (claim.pace && grow_pace(graph) != *claim.pace)
        fail("grow pace off");
    if (claim.smash_clique) {
        auto [i, size] = *claim.smash_clique;
        StaticGraph sm = smash(graph, i, 1);
        if (sm.n != size ||
            static_cast<int>(sm.edges.size()) != size * (size - 1) / 2)
            fail("smash at " + std::to_string(i) + " is not K_" + std::to_string(size));
    }
    for (auto& [i, expect] : exact_smashes)
        if (!(smash(graph, i, 1) == expect))
            fail("smash at " + std::to_string(i) + " differs from expected graph");
    for (auto& [cname, tc] : fixed_colorings) {
        auto& [t, col] = tc;
        if (!check_proper(col, smash(graph, t, 1), t, cname).is_ok())
            fail(cname + " is not proper on its smash");
        if (t < graph.lifetime()) {
            StaticGraph pair = graph_union(snapshot(graph, t), snapshot(graph, t + 1));
            if (!check_proper(col, pair, t, cname).is_ok())
                fail(cname + " is not proper on G_t u G_{t+1}");
        }
    }
}

// Bipartite snapshots whose middle smash is K_8: G_1 = K_{4,4} on parity
// classes, G_2 = distance-2 pairs on the 8-cycle, G_3 = diameters.
inline GadgetInstance gadget_bipartite8() {
    std::vector<Edge> e1, e2, e3;
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
            if ((u + v) % 2 == 1)
                e1.emplace_back(u, v);
    for (int i = 0; i < 8; ++i)
        e2.push_back(make_edge(i, (i + 2) % 8));
    for (int i = 0; i < 4; ++i)
        e3.push_back(make_edge(i, i + 4));
    GadgetInstance g;
    g.name = "bipartite8";
    g.graph = TemporalGraph(8, {e1, e2, e3});
    g.claim.chi_t = 8;
    g.claim.smash_clique = {2, 8};
    g.claim.snapshot_class = SnapshotClass::bipartite;
    g.vertex_names = {"a", "b", "c", "d", "e", "f", "g", "h"};
    return g;
}

// Three Hamiltonian paths on six vertices whose union is K_6.
inline GadgetInstance gadget_paths_k6() {
    // a..f -> 0..5
    std::vector<Edge> e1, e2, e3;
    detail::add_path(e1, {3, 0, 2, 4, 5, 1});  // d-a-c-e-f-b
    detail::add_path(e2, {5, 0, 1, 2, 3, 4});  // f-a-b-c-d-e
    detail::add_path(e3, {2, 5, 3, 1, 4, 0});  // c-f-d-b-e-a
    GadgetInstance g;
    g.name = "paths_k6";
    g.graph = TemporalGraph(6, {e1, e2, e3});
    g.claim.smash_clique = {2, 6};
    g.claim.snapshot_class = SnapshotClass::path;
    g.vertex_names = {"a", "b", "c", "d", "e", "f"};
    return g;
}

// K_4 decomposed into two paths, each snapshot duplicated.
inline GadgetInstance gadget_dup_k4() {
    std::vector<Edge> h1, h2;
    detail::add_path(h1, {2, 0, 3, 1});  // c-a-d-b
    detail::add_path(h2, {0, 1, 2, 3});  // a-b-c-d
    GadgetInstance g;
    g.name = "dup_k4";
    g.graph = TemporalGraph(4, {h1, h1, h2, h2});
    g.claim.chi_t = 4;
    g.claim.smash_clique = {2, 4};
    g.claim.snapshot_class = SnapshotClass::path;
    g.vertex_names = {"a", "b", "c", "d"};
    return g;
}

// Three d-degenerate snapshots smashing to K_{5d}: five bags of d
// vertices wired with complete-bipartite, staircase, and clique blocks.
inline GadgetInstance gadget_degenerate5d(int d) {
    if (d < 1)
        throw std::invalid_argument("degenerate5d requires d >= 1");
    auto bag = [&](int i) {
        std::vector<int> vs(d);
        for (int k = 0; k < d; ++k)
            vs[k] = (i - 1) * d + k;
        return vs;
    };
    auto t1 = [&](std::vector<Edge>& es, int i, int j) {
        detail::add_bipartite(es, bag(i), bag(j));
    };
    // Clique on bag i plus edges a_i^k - a_j^l for l <= k.
    auto t2 = [&](std::vector<Edge>& es, int i, int j) {
        detail::add_clique(es, bag(i));
        auto bi = bag(i), bj = bag(j);
        for (int k = 0; k < d; ++k)
            for (int l = 0; l <= k; ++l)
                es.push_back(make_edge(bi[k], bj[l]));
    };
    auto t3 = [&](std::vector<Edge>& es, int i) { detail::add_clique(es, bag(i)); };
    std::vector<Edge> e1, e2, e3;
    t1(e1, 1, 2); t1(e1, 4, 5); t2(e1, 2, 3); t2(e1, 3, 4); t3(e1, 5);
    t1(e2, 2, 5); t1(e2, 5, 1); t2(e2, 4, 3); t2(e2, 3, 2); t3(e2, 1);
    t1(e3, 2, 4); t1(e3, 4, 1); t1(e3, 1, 3); t1(e3, 3, 5);
    GadgetInstance g;
    g.name = "degenerate5d";
    g.graph = TemporalGraph(5 * d, {e1, e2, e3});
    g.claim.smash_clique = {2, 5 * d};
    g.claim.snapshot_class = SnapshotClass::degenerate;
    g.claim.class_param = d;
    for (int i = 1; i <= 5; ++i)
        for (int k = 1; k <= d; ++k)
            g.vertex_names.push_back("a" + std::to_string(i) + "_" + std::to_string(k));
    return g;
}

// Delta-bounded snapshots smashing to K_{3*delta+1}: a hub x joined to a
// rotating clique, the other two groups matched completely.
inline GadgetInstance gadget_bounded3delta(int delta) {
    if (delta < 1)
        throw std::invalid_argument("bounded3delta requires delta >= 1");
    auto group = [&](int i) {
        std::vector<int> vs(delta);
        for (int k = 0; k < delta; ++k)
            vs[k] = 1 + (i - 1) * delta + k;
        return vs;
    };
    auto with_hub = [&](std::vector<int> vs) {
        vs.push_back(0);
        return vs;
    };
    std::vector<Edge> e1, e2, e3;
    detail::add_clique(e1, with_hub(group(1)));
    detail::add_bipartite(e1, group(2), group(3));
    detail::add_clique(e2, with_hub(group(2)));
    detail::add_bipartite(e2, group(1), group(3));
    detail::add_clique(e3, with_hub(group(3)));
    detail::add_bipartite(e3, group(2), group(1));
    GadgetInstance g;
    g.name = "bounded3delta";
    g.graph = TemporalGraph(3 * delta + 1, {e1, e2, e3});
    g.claim.smash_clique = {2, 3 * delta + 1};
    g.claim.snapshot_class = SnapshotClass::degree_bounded;
    g.claim.class_param = delta;
    g.vertex_names.push_back("x");
    for (int i = 1; i <= 3; ++i)
        for (int k = 1; k <= delta; ++k)
            g.vertex_names.push_back("w" + std::to_string(i) + "_" + std::to_string(k));
    return g;
}

// Path snapshots shipping a 6-coloring c_2 that no 6-color c_3 can
// follow. Vertex order A, u1..u6, B, v1..v6, w1..w5.
inline GadgetInstance gadget_seven_color_paths() {
    const int A = 0, B = 7;
    auto u = [](int i) { return i; };        // u1..u6 -> 1..6
    auto v = [](int i) { return 7 + i; };    // v1..v6 -> 8..13
    auto w = [](int i) { return 13 + i; };   // w1..w5 -> 14..18
    std::vector<Edge> e2, e3, e4;
    detail::add_path(e2, {w(1), w(4), u(5), u(1), u(2), A, u(3), u(4), u(6), w(3),
                          v(6), v(4), v(3), B, v(2), v(1), v(5), w(5), w(2)});
    detail::add_path(e3, {w(4), u(1), u(3), u(2), u(4), A, u(6), w(1), u(5), w(3),
                          v(5), w(2), v(6), B, v(4), v(2), v(3), v(1), w(5)});
    detail::add_path(e4, {w(2), w(5), w(3), w(4), w(1), u(6), u(5), u(4), u(3), u(2),
                          u(1), A, B, v(1), v(2), v(3), v(4), v(5), v(6)});
    GadgetInstance g;
    g.name = "seven_color_paths";
    // G_1 := G_2 keeps the snapshot class and c_2's properness on S_2.
    g.graph = TemporalGraph(19, {e2, e2, e3, e4});
    g.claim.snapshot_class = SnapshotClass::path;
    g.vertex_names = {"A"};
    for (int i = 1; i <= 6; ++i)
        g.vertex_names.push_back("u" + std::to_string(i));
    g.vertex_names.push_back("B");
    for (int i = 1; i <= 6; ++i)
        g.vertex_names.push_back("v" + std::to_string(i));
    for (int i = 1; i <= 5; ++i)
        g.vertex_names.push_back("w" + std::to_string(i));
    Coloring c2(19);
    c2[A] = c2[B] = c2[w(4)] = c2[w(5)] = 5;
    c2[u(1)] = c2[v(1)] = 4;
    c2[u(2)] = c2[v(2)] = c2[w(3)] = 3;
    c2[u(3)] = c2[v(3)] = c2[w(1)] = c2[w(2)] = 2;
    c2[u(4)] = c2[v(4)] = 1;
    c2[u(5)] = c2[v(5)] = c2[u(6)] = c2[v(6)] = 0;
    g.fixed_colorings["c2"] = {2, c2};
    return g;
}

// Grow-pace-1 path snapshots with temporal chromatic number 4.
inline GadgetInstance gadget_p4_growpace() {
    // a..d -> 0..3
    std::vector<std::vector<Edge>> snaps = {
        {{0, 2}, {2, 3}, {1, 3}},  // a-c, c-d, d-b
        {{0, 2}, {0, 3}, {1, 3}},  // a-c, a-d, d-b
        {{0, 3}, {1, 3}, {1, 2}},  // a-d, d-b, b-c
        {{1, 2}, {0, 1}, {0, 3}},  // b-c, a-b, a-d
    };
    GadgetInstance g;
    g.name = "p4_growpace";
    g.graph = TemporalGraph(4, snaps);
    g.claim.chi_t = 4;
    g.claim.snapshot_class = SnapshotClass::path;
    g.claim.pace = 1;
    g.vertex_names = {"a", "b", "c", "d"};
    return g;
}

// Grow-pace-1, degree-3 snapshots with temporal chromatic number 5.
inline GadgetInstance gadget_delta3_growpace() {
    // a..e -> 0..4
    std::vector<std::vector<Edge>> snaps = {
        {{3, 4}, {2, 3}, {1, 2}, {0, 1}, {0, 2}, {0, 4}, {1, 4}},
        {{3, 4}, {2, 3}, {1, 2}, {0, 1}, {0, 4}, {0, 3}, {1, 4}},
        {{2, 3}, {1, 2}, {0, 1}, {0, 4}, {0, 3}, {1, 4}, {2, 4}},
        {{2, 3}, {0, 1}, {0, 3}, {1, 4}, {2, 4}, {1, 3}, {0, 4}},
    };
    GadgetInstance g;
    g.name = "delta3_growpace";
    g.graph = TemporalGraph(5, snaps);
    g.claim.chi_t = 5;
    g.claim.snapshot_class = SnapshotClass::degree_bounded;
    g.claim.class_param = 3;
    g.claim.pace = 1;
    g.vertex_names = {"a", "b", "c", "d", "e"};
    // S_2 = K_5 - bd, S_3 = K_5 - ac.
    auto minus = [](Edge e) {
        StaticGraph k5 = detail::complete_graph(5);
        std::vector<Edge> es;
        for (Edge f : k5.edges)
            if (f != e)
                es.push_back(f);
        return StaticGraph(5, es);
    };
    g.exact_smashes = {{2, minus({1, 3})}, {3, minus({0, 2})}};
    return g;
}

// The 4-vertex, 6-snapshot instance illustrating the 2-colorability
// interval construction.
inline GadgetInstance gadget_col2_figure() {
    // u,v,w,s -> 0..3
    std::vector<std::vector<Edge>> snaps = {
        {{0, 2}, {0, 1}},  // u-w, u-v
        {{2, 3}, {1, 3}},  // w-s, v-s
        {{2, 3}},          // w-s
        {{0, 3}},          // u-s
        {{1, 3}},          // v-s
        {{1, 2}},          // v-w
    };
    GadgetInstance g;
    g.name = "col2_figure";
    g.graph = TemporalGraph(4, snaps);
    g.vertex_names = {"u", "v", "w", "s"};
    return g;
}

// Name-based lookup for the CLI; `param` is d or delta where one applies.
inline GadgetInstance make_gadget(const std::string& name, int param = 0) {
    if (name == "bipartite8") return gadget_bipartite8();
    if (name == "paths_k6") return gadget_paths_k6();
    if (name == "dup_k4") return gadget_dup_k4();
    if (name == "degenerate5d") return gadget_degenerate5d(param > 0 ? param : 1);
    if (name == "bounded3delta") return gadget_bounded3delta(param > 0 ? param : 1);
    if (name == "seven_color_paths") return gadget_seven_color_paths();
    if (name == "p4_growpace") return gadget_p4_growpace();
    if (name == "delta3_growpace") return gadget_delta3_growpace();
    if (name == "col2_figure") return gadget_col2_figure();
    throw std::invalid_argument("unknown gadget " + name);
}

inline std::vector<std::string> gadget_names() {
    return {"bipartite8", "paths_k6", "dup_k4", "degenerate5d", "bounded3delta",
            "seven_color_paths", "p4_growpace", "delta3_growpace", "col2_figure"};
}

}  // namespace tempo

#endif
