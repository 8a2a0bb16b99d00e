#ifndef TEMPO_COLORING_HPP
#define TEMPO_COLORING_HPP

#include <cstdint>
#include <set>
#include <string>

#include "tempo/graph.hpp"

namespace tempo {

// Color ids are dense non-negative integers starting at 0.
using Coloring = std::vector<int>;

struct ColoringSeq {
    std::vector<Coloring> per_time;  // c_1..c_T
    int palette_size = 0;            // every color id must be < palette_size
};

enum class VerdictStatus { ok, improper, incompatible };

// Result of a temporal-coloring check. For a non-ok status, `time` and
// `edge` locate the earliest violation: for improper, c_time repeats a
// color on `edge` within S_time; for incompatible, c_time(edge.first)
// equals c_{time+1}(edge.second).
struct Verdict {
    VerdictStatus status = VerdictStatus::ok;
    int time = 0;
    Edge edge{0, 0};
    std::string detail;

    bool is_ok() const { return status == VerdictStatus::ok; }
    static Verdict pass() { return Verdict{}; }
};

// Compatibility of c1 (on g1) with c2 (on g2): for every edge {u,v} of
// g1 u g2, c1(u) != c2(v) and c1(v) != c2(u). The reported edge is
// directed: c1 at edge.first clashes with c2 at edge.second.
inline Verdict is_compatible(const Coloring& c1, const Coloring& c2,
                             const StaticGraph& g1, const StaticGraph& g2) {
    if (g1.n != g2.n)
        throw std::invalid_argument("compatibility check on mismatched vertex sets");
    if (static_cast<int>(c1.size()) != g1.n || static_cast<int>(c2.size()) != g2.n)
        throw std::invalid_argument("coloring size does not match vertex count");
    StaticGraph u = graph_union(g1, g2);
    for (auto [a, b] : u.edges) {
        if (c1[a] == c2[b])
            return Verdict{VerdictStatus::incompatible, 0, {a, b},
                           "c_t(" + std::to_string(a) + ") = c_{t+1}(" + std::to_string(b) + ")"};
        if (c1[b] == c2[a])
            return Verdict{VerdictStatus::incompatible, 0, {b, a},
                           "c_t(" + std::to_string(b) + ") = c_{t+1}(" + std::to_string(a) + ")"};
    }
    return Verdict::pass();
}

inline Verdict check_proper(const Coloring& c, const StaticGraph& s, int time, const std::string& what) {
    if (static_cast<int>(c.size()) != s.n)
        throw std::invalid_argument("coloring size does not match vertex count");
    for (auto [u, v] : s.edges)
        if (c[u] == c[v])
            return Verdict{VerdictStatus::improper, time, {u, v},
                           "color " + std::to_string(c[u]) + " repeated on edge of " + what};
    return Verdict::pass();
}

// Temporal k-coloring check: every c_i proper on S_i (radius-1 smash,
// empty beyond the boundary), consecutive colorings compatible. Returns
// the earliest violation by (time, condition, edge).
inline Verdict verify(const TemporalGraph& g, const ColoringSeq& seq) {
    int T = g.lifetime();
    if (static_cast<int>(seq.per_time.size()) != T)
        throw std::invalid_argument("coloring sequence length differs from lifetime");
    for (const auto& c : seq.per_time) {
        if (static_cast<int>(c.size()) != g.n)
            throw std::invalid_argument("coloring size does not match vertex count");
        for (int col : c)
            if (col < 0 || col >= seq.palette_size)
                throw std::invalid_argument("color id outside palette");
    }
    for (int i = 1; i <= T; ++i) {
        Verdict v = check_proper(seq.per_time[i - 1], smash(g, i, 1), i,
                                 "S_" + std::to_string(i));
        if (!v.is_ok())
            return v;
        if (i < T) {
            Verdict w = is_compatible(seq.per_time[i - 1], seq.per_time[i],
                                      snapshot(g, i), snapshot(g, i + 1));
            if (!w.is_ok()) {
                w.time = i;
                return w;
            }
        }
    }
    return Verdict::pass();
}

inline int colors_used(const ColoringSeq& seq) {
    std::set<int> ids;
    for (const auto& c : seq.per_time)
        ids.insert(c.begin(), c.end());
    return static_cast<int>(ids.size());
}

}  // namespace tempo

#endif
