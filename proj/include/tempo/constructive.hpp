#ifndef TEMPO_CONSTRUCTIVE_HPP
#define TEMPO_CONSTRUCTIVE_HPP

#include "tempo/exact.hpp"

namespace tempo {

// Per-snapshot proper colorings x_1..x_T with a common palette bound k.
struct SnapshotColorings {
    std::vector<Coloring> per_time;
    int k = 0;
};

namespace detail {

inline void require_proper(const Coloring& c, const StaticGraph& s, int k, const std::string& what) {
    if (static_cast<int>(c.size()) != s.n)
        throw std::invalid_argument(what + ": coloring size mismatch");
    for (int x : c)
        if (x < 0 || x >= k)
            throw std::invalid_argument(what + ": color id outside palette bound");
    if (!check_proper(c, s, 0, what).is_ok())
        throw std::invalid_argument(what + ": coloring is not proper");
}

inline void require_duplicated(const TemporalGraph& g) {
    if (g.lifetime() % 2 != 0)
        throw std::invalid_argument("duplicated shape requires even lifetime");
    for (int j = 1; j <= g.lifetime() / 2; ++j)
        if (!(snapshot(g, 2 * j - 1) == snapshot(g, 2 * j)))
            throw std::invalid_argument("snapshots " + std::to_string(2 * j - 1) + " and " +
                                        std::to_string(2 * j) + " differ");
}

inline void require_degree_bounded(const TemporalGraph& g, int delta) {
    for (int i = 1; i <= g.lifetime(); ++i)
        if (max_degree(snapshot(g, i)) > delta)
            throw std::invalid_argument("snapshot " + std::to_string(i) +
                                        " exceeds degree bound " + std::to_string(delta));
}

// Greedy smallest-available coloring by vertex index; per-vertex
// forbidden sets may pre-seed the constraints.
inline Coloring greedy_coloring(const StaticGraph& s, int palette,
                                const std::vector<std::vector<bool>>* forbidden = nullptr) {
    auto adj = s.adjacency();
    Coloring col(s.n, -1);
    for (int v = 0; v < s.n; ++v) {
        std::vector<bool> used(palette, false);
        if (forbidden)
            for (int c = 0; c < palette; ++c)
                if ((*forbidden)[v][c])
                    used[c] = true;
        for (int u : adj[v])
            if (col[u] != -1)
                used[col[u]] = true;
        int c = 0;
        while (c < palette && used[c])
            ++c;
        if (c == palette)
            throw std::logic_error("greedy coloring ran out of colors");
        col[v] = c;
    }
    return col;
}

// List coloring along the reverse degeneracy ordering of `s`.
inline Coloring list_color_by_degeneracy(const StaticGraph& s, int palette,
                                         const std::vector<std::vector<bool>>& allowed) {
    auto adj = s.adjacency();
    auto deg = degeneracy(s);
    Coloring col(s.n, -1);
    for (int idx = s.n - 1; idx >= 0; --idx) {
        int v = deg.ordering[idx];
        std::vector<bool> used(palette, false);
        for (int u : adj[v])
            if (col[u] != -1)
                used[col[u]] = true;
        int pick = -1;
        for (int c = 0; c < palette; ++c)
            if (allowed[v][c] && !used[c]) {
                pick = c;
                break;
            }
        if (pick == -1)
            throw std::logic_error("list coloring ran out of colors");
        col[v] = pick;
    }
    return col;
}

}  // namespace detail

// chi^t <= k^3: each c_i packs three per-snapshot colorings, rotated by
// i mod 3 so consecutive times share two coordinates. Boundary snapshots
// reuse x_1 and x_T.
inline ColoringSeq color_cube(const TemporalGraph& g, const SnapshotColorings& xs) {
    int T = g.lifetime(), k = xs.k;
    if (static_cast<int>(xs.per_time.size()) != T)
        throw std::invalid_argument("snapshot colorings length mismatch");
    for (int i = 1; i <= T; ++i)
        detail::require_proper(xs.per_time[i - 1], snapshot(g, i), k, "x_" + std::to_string(i));
    auto x = [&](int i) -> const Coloring& {
        return xs.per_time[std::clamp(i, 1, T) - 1];
    };
    ColoringSeq seq;
    seq.palette_size = k * k * k;
    for (int i = 1; i <= T; ++i) {
        const Coloring *a, *b, *c;
        switch (i % 3) {
            case 0: a = &x(i); b = &x(i + 1); c = &x(i - 1); break;
            case 1: a = &x(i - 1); b = &x(i); c = &x(i + 1); break;
            default: a = &x(i + 1); b = &x(i - 1); c = &x(i); break;
        }
        Coloring ci(g.n);
        for (int v = 0; v < g.n; ++v)
            ci[v] = ((*a)[v] * k + (*b)[v]) * k + (*c)[v];
        seq.per_time.push_back(std::move(ci));
    }
    return seq;
}

// chi^t <= 2k: odd times color from {0..k-1}, even times from {k..2k-1},
// each c_i a proper coloring of its own smash.
inline ColoringSeq color_double(const TemporalGraph& g,
                                const std::vector<Coloring>& smash_colorings, int k) {
    int T = g.lifetime();
    if (static_cast<int>(smash_colorings.size()) != T)
        throw std::invalid_argument("smash colorings length mismatch");
    ColoringSeq seq;
    seq.palette_size = 2 * k;
    for (int i = 1; i <= T; ++i) {
        detail::require_proper(smash_colorings[i - 1], smash(g, i, 1), k,
                               "smash coloring " + std::to_string(i));
        Coloring ci = smash_colorings[i - 1];
        if (i % 2 == 0)
            for (int& c : ci)
                c += k;
        seq.per_time.push_back(std::move(ci));
    }
    return seq;
}

// chi^t <= k^2 for duplicated snapshots: pairs (x_j, x_{j+1}) in
// alternating coordinate order, the first copy of each step reusing the
// previous step's second coloring.
inline ColoringSeq color_square_duplicated(const TemporalGraph& g, const SnapshotColorings& xs) {
    detail::require_duplicated(g);
    int T = g.lifetime(), half = T / 2, k = xs.k;
    if (static_cast<int>(xs.per_time.size()) != half)
        throw std::invalid_argument("expected one coloring per deduplicated snapshot");
    for (int j = 1; j <= half; ++j)
        detail::require_proper(xs.per_time[j - 1], snapshot(g, 2 * j - 1), k,
                               "x_" + std::to_string(j));
    auto x = [&](int j) -> const Coloring& {
        return xs.per_time[std::min(j, half) - 1];
    };
    auto second = [&](int j) {
        Coloring c(g.n);
        for (int v = 0; v < g.n; ++v)
            c[v] = (j % 2 == 0) ? x(j)[v] * k + x(j + 1)[v]
                                : x(j + 1)[v] * k + x(j)[v];
        return c;
    };
    ColoringSeq seq;
    seq.palette_size = k * k;
    for (int j = 1; j <= half; ++j) {
        seq.per_time.push_back(j == 1 ? second(1) : seq.per_time.back());
        seq.per_time.push_back(second(j));
    }
    return seq;
}

enum class Method { cube, twice, dup_square, bounded, dup_bounded, growpace1 };

// Single-owner incremental colorer. Snapshots are fed in order; once
// E_{i+1} is known the stepper emits c_i, and finish() flushes c_T.
// Emitted colorings depend only on the snapshots fed so far.
class OnlineStepper {
public:
    // `param` is the palette seed k for cube/twice/dup_square and the
    // degree bound delta for the other methods.
    OnlineStepper(Method m, int n, int param) : method_(m), n_(n), param_(param) {
        if (n < 0 || param < 0)
            throw std::invalid_argument("bad stepper parameters");
        switch (method_) {
            case Method::cube: palette_ = param * param * param; break;
            case Method::twice: palette_ = 2 * param; break;
            case Method::dup_square: palette_ = param * param; break;
            case Method::bounded: palette_ = 5 * param + 1; break;
            case Method::dup_bounded: palette_ = 3 * param + 1; break;
            case Method::growpace1: palette_ = param + 2; break;
        }
        palette_ = std::max(palette_, 1);
    }

    int palette() const { return palette_; }

    // Feed G_{t} for t = snapshots-so-far + 1; returns c_{t-1} for t >= 2.
    std::optional<Coloring> feed(const StaticGraph& snap) {
        if (finished_)
            throw std::logic_error("feed after finish");
        if (snap.n != n_)
            throw std::invalid_argument("snapshot vertex count mismatch");
        validate(snap);
        snaps_.push_back(snap);
        if (snaps_.size() < 2)
            return std::nullopt;
        return emit(static_cast<int>(snaps_.size()) - 1);
    }

    // Emits the last coloring c_T.
    Coloring finish() {
        if (finished_)
            throw std::logic_error("finish called twice");
        if (snaps_.empty())
            throw std::logic_error("finish before any snapshot");
        finished_ = true;
        return emit(static_cast<int>(snaps_.size()));
    }

private:
    Method method_;
    int n_, param_, palette_;
    bool finished_ = false;
    std::vector<StaticGraph> snaps_;
    std::vector<Coloring> aux_;   // per-snapshot (or per-H_j) colorings
    Coloring prev_;               // last emitted coloring

    int avail() const { return static_cast<int>(snaps_.size()); }

    StaticGraph window(int i) const {  // G_{i-1} u G_i u G_{i+1}, clipped
        StaticGraph u = snaps_[i - 1];
        if (i >= 2)
            u = graph_union(u, snaps_[i - 2]);
        if (i < avail())
            u = graph_union(u, snaps_[i]);
        return u;
    }

    void validate(const StaticGraph& snap) const {
        switch (method_) {
            case Method::bounded:
            case Method::dup_bounded:
                if (max_degree(snap) > param_)
                    throw std::invalid_argument("snapshot exceeds degree bound");
                break;
            case Method::growpace1: {
                if (max_degree(snap) > param_)
                    throw std::invalid_argument("snapshot exceeds degree bound");
                if (!snaps_.empty()) {
                    TemporalGraph two(snap.n, {snaps_.back().edges, snap.edges});
                    if (grow_pace(two) > 1)
                        throw std::invalid_argument("grow pace exceeds 1");
                }
                break;
            }
            default:
                break;
        }
        if ((method_ == Method::dup_square || method_ == Method::dup_bounded) &&
            snaps_.size() % 2 == 1 && !(snaps_.back() == snap))
            throw std::invalid_argument("duplicated shape violated");
    }

    const Coloring& aux_for(int t) {  // deterministic coloring of snapshot t
        while (static_cast<int>(aux_.size()) < t) {
            Coloring x = proper_coloring(snaps_[aux_.size()]);
            int used = x.empty() ? 0 : 1 + *std::max_element(x.begin(), x.end());
            if (used > param_)
                throw std::invalid_argument("snapshot needs more than k colors");
            aux_.push_back(std::move(x));
        }
        return aux_[t - 1];
    }

    Coloring emit(int i) {
        Coloring c;
        switch (method_) {
            case Method::cube: c = emit_cube(i); break;
            case Method::twice: c = emit_twice(i); break;
            case Method::dup_square: c = emit_dup_square(i); break;
            case Method::bounded: c = emit_bounded(i); break;
            case Method::dup_bounded: c = emit_dup_bounded(i); break;
            case Method::growpace1: c = emit_growpace1(i); break;
        }
        prev_ = c;
        return c;
    }

    Coloring emit_cube(int i) {
        int k = std::max(param_, 1);
        aux_for(std::min(i + 1, avail()));  // populate before taking references
        const Coloring& a0 = aux_for(std::max(i - 1, 1));
        const Coloring& a1 = aux_for(i);
        const Coloring& a2 = aux_for(std::min(i + 1, avail()));
        const Coloring *a, *b, *c;
        switch (i % 3) {
            case 0: a = &a1; b = &a2; c = &a0; break;
            case 1: a = &a0; b = &a1; c = &a2; break;
            default: a = &a2; b = &a0; c = &a1; break;
        }
        Coloring ci(n_);
        for (int v = 0; v < n_; ++v)
            ci[v] = ((*a)[v] * k + (*b)[v]) * k + (*c)[v];
        return ci;
    }

    Coloring emit_twice(int i) {
        Coloring c = proper_coloring(window(i));
        int used = c.empty() ? 0 : 1 + *std::max_element(c.begin(), c.end());
        if (used > param_)
            throw std::invalid_argument("smash needs more than k colors");
        if (i % 2 == 0)
            for (int& x : c)
                x += param_;
        return c;
    }

    // H_j coloring, deterministic; H_j lives at snapshot 2j-1.
    const Coloring& dedup_aux(int j) {
        while (static_cast<int>(aux_.size()) < j) {
            int t = 2 * static_cast<int>(aux_.size()) + 1;
            Coloring x = proper_coloring(snaps_[t - 1]);
            int used = x.empty() ? 0 : 1 + *std::max_element(x.begin(), x.end());
            if (used > param_)
                throw std::invalid_argument("snapshot needs more than k colors");
            aux_.push_back(std::move(x));
        }
        return aux_[j - 1];
    }

    Coloring emit_dup_square(int i) {
        if (finished_ && avail() % 2 != 0)
            throw std::invalid_argument("duplicated shape requires even lifetime");
        int k = std::max(param_, 1);
        int half_avail = avail() / 2 + avail() % 2;
        auto pair_color = [&](const Coloring& a, const Coloring& b) {
            Coloring c(n_);
            for (int v = 0; v < n_; ++v)
                c[v] = a[v] * k + b[v];
            return c;
        };
        if (i % 2 == 1) {
            int j = (i + 1) / 2;
            if (j == 1)
                return pair_color(dedup_aux(1), dedup_aux(1));
            return prev_;  // c^1_j = c^2_{j-1}
        }
        int j = i / 2;
        dedup_aux(std::min(j + 1, half_avail));  // populate before taking references
        const Coloring& xj = dedup_aux(j);
        const Coloring& xn = dedup_aux(std::min(j + 1, half_avail));
        return (j % 2 == 0) ? pair_color(xj, xn) : pair_color(xn, xj);
    }

    Coloring emit_bounded(int i) {
        if (i == 1)
            return detail::greedy_coloring(window(1), palette_);
        // Lists keep colors compatible with c_{i-1}, then list-color S_i
        // along a reverse degeneracy order.
        StaticGraph pair = graph_union(snaps_[i - 2], snaps_[i - 1]);
        auto adj = pair.adjacency();
        std::vector<std::vector<bool>> allowed(n_, std::vector<bool>(palette_, true));
        for (int v = 0; v < n_; ++v)
            for (int u : adj[v])
                allowed[v][prev_[u]] = false;
        return detail::list_color_by_degeneracy(window(i), palette_, allowed);
    }

    Coloring emit_dup_bounded(int i) {
        if (finished_ && avail() % 2 != 0)
            throw std::invalid_argument("duplicated shape requires even lifetime");
        if (i == 1)
            return detail::greedy_coloring(snaps_[0], palette_);
        if (i % 2 == 1)
            return prev_;  // c_{2j+1} = c_{2j}
        int j = i / 2;
        // Greedy c_{2j}: avoid c_{2j-1} on H_j neighbors, proper on H_j u H_{j+1}.
        const StaticGraph& hj = snaps_[2 * j - 2];
        StaticGraph scope = hj;
        if (2 * j < avail())
            scope = graph_union(scope, snaps_[2 * j]);
        auto adj = hj.adjacency();
        std::vector<std::vector<bool>> forbid(n_, std::vector<bool>(palette_, false));
        for (int v = 0; v < n_; ++v)
            for (int u : adj[v])
                forbid[v][prev_[u]] = true;
        return detail::greedy_coloring(scope, palette_, &forbid);
    }

    Coloring emit_growpace1(int i) {
        if (i == 1) {
            // Base case: the two vertices pushed above delta by the edge
            // arriving in G_2 get colors 0 and 1, everyone else greedy.
            StaticGraph s1 = window(1);
            auto adj = s1.adjacency();
            Coloring col(n_, -1);
            int special = 0;
            for (int v = 0; v < n_ && special < 2; ++v)
                if (static_cast<int>(adj[v].size()) > param_)
                    col[v] = special++;
            for (int v = 0; v < n_; ++v) {
                if (col[v] != -1)
                    continue;
                std::vector<bool> used(palette_, false);
                for (int u : adj[v])
                    if (col[u] != -1)
                        used[col[u]] = true;
                int c = 0;
                while (c < palette_ && used[c])
                    ++c;
                if (c == palette_)
                    throw std::logic_error("base case ran out of colors");
                col[v] = c;
            }
            return col;
        }
        Coloring col = prev_;
        // At most one edge enters G_{i+1}; recolor one endpoint if it
        // would clash.
        if (i < avail()) {
            const auto& cur = snaps_[i - 1].edges;
            const auto& nxt = snaps_[i].edges;
            std::vector<Edge> added;
            std::set_difference(nxt.begin(), nxt.end(), cur.begin(), cur.end(),
                                std::back_inserter(added));
            if (added.size() > 1)
                throw std::invalid_argument("grow pace exceeds 1");
            if (!added.empty() && col[added[0].first] == col[added[0].second]) {
                StaticGraph pair = graph_union(snaps_[i - 2], snaps_[i - 1]);
                auto adj = pair.adjacency();
                auto [u, v] = added[0];
                // Recolor the endpoint of degree <= delta in G_{i-1} u G_i;
                // ties go to the smaller index.
                int du = static_cast<int>(adj[u].size());
                int dv = static_cast<int>(adj[v].size());
                int pick = (du <= param_) ? u : (dv <= param_) ? v : (du <= dv ? u : v);
                std::vector<bool> used(palette_, false);
                used[prev_[pick]] = true;
                for (int w : adj[pick])
                    used[prev_[w]] = true;
                int c = 0;
                while (c < palette_ && used[c])
                    ++c;
                if (c == palette_)
                    throw std::logic_error("recoloring ran out of colors");
                col[pick] = c;
            }
        }
        return col;
    }
};

namespace detail {

inline ColoringSeq run_stepper(Method m, const TemporalGraph& g, int param) {
    OnlineStepper st(m, g.n, param);
    ColoringSeq seq;
    seq.palette_size = st.palette();
    for (int i = 1; i <= g.lifetime(); ++i)
        if (auto c = st.feed(snapshot(g, i)))
            seq.per_time.push_back(std::move(*c));
    seq.per_time.push_back(st.finish());
    return seq;
}

}  // namespace detail

// chi^t <= 5*delta + 1 for delta-bounded snapshots (list coloring).
inline ColoringSeq color_bounded_degree(const TemporalGraph& g, int delta) {
    detail::require_degree_bounded(g, delta);
    return detail::run_stepper(Method::bounded, g, delta);
}

// chi^t <= 3*delta + 1 for duplicated delta-bounded snapshots.
inline ColoringSeq color_bounded_degree_duplicated(const TemporalGraph& g, int delta) {
    detail::require_duplicated(g);
    detail::require_degree_bounded(g, delta);
    return detail::run_stepper(Method::dup_bounded, g, delta);
}

// chi^t <= delta + 2 for grow-pace-1, delta-bounded snapshots.
inline ColoringSeq color_growpace1(const TemporalGraph& g, int delta) {
    if (grow_pace(g) > 1)
        throw std::invalid_argument("grow pace exceeds 1");
    detail::require_degree_bounded(g, delta);
    return detail::run_stepper(Method::growpace1, g, delta);
}

}  // namespace tempo

#endif
