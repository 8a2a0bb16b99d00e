#ifndef TEMPO_EXACT_HPP
#define TEMPO_EXACT_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>

#include "tempo/coloring.hpp"
#include "tempo/graph.hpp"

namespace tempo {

struct SearchConfig {
    std::optional<long long> node_budget;
    std::optional<double> time_budget_seconds;
    std::optional<int> parallel_width;
    bool canonical_pruning = true;
};

// Thrown when a search exceeds its budget; carries the best bounds known
// at that point.
struct resource_error : std::runtime_error {
    int lower = 0;
    int upper = 0;
    resource_error(int lo, int hi)
        : std::runtime_error("search budget exhausted (bounds " + std::to_string(lo) +
                             ".." + std::to_string(hi) + ")"),
          lower(lo), upper(hi) {}
};

namespace detail {

struct Budget {
    long long nodes_left = -1;  // -1 = unlimited
    std::chrono::steady_clock::time_point deadline{};
    bool timed = false;
    long long tick = 0;

    explicit Budget(const SearchConfig& cfg) {
        if (cfg.node_budget)
            nodes_left = *cfg.node_budget;
        if (cfg.time_budget_seconds) {
            timed = true;
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(*cfg.time_budget_seconds));
        }
    }

    // Returns false once the budget is gone.
    bool step() {
        if (nodes_left >= 0 && --nodes_left < 0)
            return false;
        if (timed && (++tick & 1023) == 0 &&
            std::chrono::steady_clock::now() > deadline)
            return false;
        return true;
    }
};

// Greedy clique, seeded from every vertex; candidates picked by degree
// within the remaining candidate set, ties by index.
inline std::vector<int> greedy_clique(const StaticGraph& s) {
    auto adj = s.adjacency();
    std::vector<std::vector<bool>> am(s.n, std::vector<bool>(s.n, false));
    for (auto [u, v] : s.edges)
        am[u][v] = am[v][u] = true;
    std::vector<int> best;
    for (int seed = 0; seed < s.n; ++seed) {
        std::vector<int> clique{seed};
        std::vector<int> cand;
        for (int v : adj[seed])
            cand.push_back(v);
        std::sort(cand.begin(), cand.end());
        while (!cand.empty()) {
            int pick = -1, pick_deg = -1;
            for (int v : cand) {
                int d = 0;
                for (int w : cand)
                    if (am[v][w])
                        ++d;
                if (d > pick_deg) {
                    pick_deg = d;
                    pick = v;
                }
            }
            clique.push_back(pick);
            std::vector<int> next;
            for (int v : cand)
                if (v != pick && am[pick][v])
                    next.push_back(v);
            cand = std::move(next);
        }
        if (clique.size() > best.size()) {
            std::sort(clique.begin(), clique.end());
            best = clique;
        }
    }
    return best;
}

}  // namespace detail

// DSATUR greedy coloring; ties by smallest vertex index, colors picked
// smallest-first. Deterministic.
inline Coloring dsatur_coloring(const StaticGraph& s) {
    auto adj = s.adjacency();
    Coloring col(s.n, -1);
    std::vector<std::set<int>> sat(s.n);
    for (int step = 0; step < s.n; ++step) {
        int best = -1;
        for (int v = 0; v < s.n; ++v) {
            if (col[v] != -1)
                continue;
            if (best == -1 || sat[v].size() > sat[best].size() ||
                (sat[v].size() == sat[best].size() && adj[v].size() > adj[best].size()))
                best = v;
        }
        int c = 0;
        while (sat[best].count(c))
            ++c;
        col[best] = c;
        for (int w : adj[best])
            if (col[w] == -1)
                sat[w].insert(c);
    }
    return col;
}

// Backtracking k-colorability with DSATUR-style vertex selection.
// Symmetry is broken by pre-assigning a greedy clique to distinct colors.
// Returns a witness coloring when one exists.
inline std::optional<Coloring> k_coloring(const StaticGraph& s, int k,
                                          const SearchConfig& cfg = {}) {
    if (k < 0)
        throw std::invalid_argument("negative palette");
    if (s.n == 0)
        return Coloring{};
    if (k == 0)
        return std::nullopt;
    auto adj = s.adjacency();
    auto clique = detail::greedy_clique(s);
    if (static_cast<int>(clique.size()) > k)
        return std::nullopt;
    Coloring col(s.n, -1);
    std::vector<std::map<int, int>> forbid(s.n);  // color -> #neighbors using it
    auto assign = [&](int v, int c) {
        col[v] = c;
        for (int w : adj[v])
            if (col[w] == -1)
                ++forbid[w][c];
    };
    auto unassign = [&](int v) {
        int c = col[v];
        col[v] = -1;
        for (int w : adj[v])
            if (col[w] == -1) {
                auto it = forbid[w].find(c);
                if (--it->second == 0)
                    forbid[w].erase(it);
            }
    };
    for (size_t i = 0; i < clique.size(); ++i)
        assign(clique[i], static_cast<int>(i));
    detail::Budget budget(cfg);
    int fixed = static_cast<int>(clique.size());

    auto rec = [&](auto&& self, int done) -> bool {
        if (!budget.step())
            throw resource_error(static_cast<int>(clique.size()), k);
        if (done == s.n)
            return true;
        int best = -1;
        for (int v = 0; v < s.n; ++v) {
            if (col[v] != -1)
                continue;
            if (best == -1 || forbid[v].size() > forbid[best].size())
                best = v;
        }
        if (static_cast<int>(forbid[best].size()) >= k)
            return false;
        for (int c = 0; c < k; ++c) {
            if (forbid[best].count(c))
                continue;
            assign(best, c);
            if (self(self, done + 1))
                return true;
            unassign(best);
        }
        return false;
    };
    if (!rec(rec, fixed))
        return std::nullopt;
    return col;
}

// Exact chromatic number: clique lower bound, DSATUR upper bound, then
// k-colorability tests from the bottom.
inline int chi_static(const StaticGraph& s, const SearchConfig& cfg = {}) {
    if (s.n == 0)
        return 0;
    int lb = static_cast<int>(detail::greedy_clique(s).size());
    Coloring greedy = dsatur_coloring(s);
    int ub = 1 + *std::max_element(greedy.begin(), greedy.end());
    for (int k = lb; k < ub; ++k) {
        try {
            if (k_coloring(s, k, cfg))
                return k;
        } catch (const resource_error&) {
            throw resource_error(k, ub);
        }
    }
    return ub;
}

// Deterministic proper coloring of one static graph: exact for small
// graphs, DSATUR otherwise. Used to seed the constructive algorithms.
inline Coloring proper_coloring(const StaticGraph& s, int exact_limit = 12) {
    if (s.n <= exact_limit) {
        int chi = chi_static(s);
        auto col = k_coloring(s, chi);
        return *col;
    }
    return dsatur_coloring(s);
}

namespace detail {

// Backtracking over (time, vertex) assignments: compatibility with the
// previous layer plus properness within the current smash, with
// first-use color symmetry breaking.
inline bool temporal_k_search(const TemporalGraph& g, int k, Budget& budget,
                              std::vector<Coloring>* out) {
    int T = g.lifetime();
    int n = g.n;
    if (n == 0 || k <= 0)
        return n == 0;
    std::vector<StaticGraph> smashes, pairs;
    for (int i = 1; i <= T; ++i)
        smashes.push_back(smash(g, i, 1));
    for (int i = 1; i < T; ++i)
        pairs.push_back(graph_union(snapshot(g, i), snapshot(g, i + 1)));
    std::vector<std::vector<std::vector<int>>> smash_adj, pair_adj;
    for (auto& s : smashes)
        smash_adj.push_back(s.adjacency());
    for (auto& p : pairs)
        pair_adj.push_back(p.adjacency());

    std::vector<Coloring> cs(T, Coloring(n, -1));
    auto rec = [&](auto&& self, int i, int v, int max_used) -> bool {
        if (!budget.step())
            throw resource_error(0, k);
        if (v == n) {
            if (i == T - 1)
                return true;
            return self(self, i + 1, 0, max_used);
        }
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            for (int u : smash_adj[i][v])
                if (cs[i][u] == c) {
                    ok = false;
                    break;
                }
            if (ok && i > 0)
                for (int u : pair_adj[i - 1][v])
                    if (cs[i - 1][u] == c) {
                        ok = false;
                        break;
                    }
            if (!ok)
                continue;
            cs[i][v] = c;
            if (self(self, i, v + 1, std::max(max_used, c)))
                return true;
            cs[i][v] = -1;
        }
        return false;
    };
    if (!rec(rec, 0, 0, -1))
        return false;
    if (out)
        *out = cs;
    return true;
}

}  // namespace detail

// Direct time-layered search for the temporal chromatic number.
inline int chi_temporal_direct(const TemporalGraph& g, const SearchConfig& cfg = {},
                               ColoringSeq* witness = nullptr) {
    if (g.n == 0)
        return 0;
    int lb = 1;
    for (int i = 1; i <= g.lifetime(); ++i)
        lb = std::max(lb, chi_static(smash(g, i, 1), cfg));
    detail::Budget budget(cfg);
    for (int k = lb;; ++k) {
        std::vector<Coloring> cs;
        bool found;
        try {
            found = detail::temporal_k_search(g, k, budget, &cs);
        } catch (const resource_error&) {
            throw resource_error(lb, g.n);
        }
        if (found) {
            if (witness) {
                witness->per_time = cs;
                witness->palette_size = k;
            }
            return k;
        }
    }
}

// Existence of a coloring c_{i+1} with k colors that is proper on
// S_{i+1} and compatible with c_i on G_i u G_{i+1}.
inline bool extendable(const TemporalGraph& g, int i, const Coloring& ci, int k,
                       const SearchConfig& cfg = {}) {
    int T = g.lifetime();
    if (i < 1 || i >= T)
        throw std::out_of_range("extendable time index " + std::to_string(i));
    if (!check_proper(ci, smash(g, i, 1), i, "S_i").is_ok())
        throw std::invalid_argument("c_i is not proper on S_i");
    if (k <= 0)
        return g.n == 0;
    StaticGraph next_smash = smash(g, i + 1, 1);
    StaticGraph pair = graph_union(snapshot(g, i), snapshot(g, i + 1));
    auto smash_adj = next_smash.adjacency();
    auto pair_adj = pair.adjacency();

    // Per-vertex allowed lists from compatibility, then most-constrained
    // vertex first with forward checking.
    std::vector<std::vector<bool>> allowed(g.n, std::vector<bool>(k, true));
    for (int v = 0; v < g.n; ++v)
        for (int u : pair_adj[v])
            if (ci[u] < k)
                allowed[v][ci[u]] = false;
    Coloring col(g.n, -1);
    detail::Budget budget(cfg);
    auto count_allowed = [&](int v) {
        int c = 0;
        for (int x = 0; x < k; ++x)
            if (allowed[v][x])
                ++c;
        return c;
    };
    auto rec = [&](auto&& self, int done) -> bool {
        if (!budget.step())
            throw resource_error(0, k);
        if (done == g.n)
            return true;
        int best = -1, best_cnt = k + 1;
        for (int v = 0; v < g.n; ++v) {
            if (col[v] != -1)
                continue;
            int c = count_allowed(v);
            if (c < best_cnt) {
                best_cnt = c;
                best = v;
            }
        }
        if (best_cnt == 0)
            return false;
        for (int c = 0; c < k; ++c) {
            if (!allowed[best][c])
                continue;
            col[best] = c;
            std::vector<int> touched;
            for (int u : smash_adj[best])
                if (col[u] == -1 && allowed[u][c]) {
                    allowed[u][c] = false;
                    touched.push_back(u);
                }
            if (self(self, done + 1))
                return true;
            for (int u : touched)
                allowed[u][c] = true;
            col[best] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

struct BoundReport {
    int chi_s = 0;    // max chromatic number over snapshots
    int chi_3s = 0;   // max chromatic number over radius-1 smashes
    int lower = 0;    // = chi_3s
    std::map<std::string, long long> uppers;
};

inline BoundReport bound_report(const TemporalGraph& g, const SearchConfig& cfg = {}) {
    BoundReport r;
    int delta = 0;
    for (int i = 1; i <= g.lifetime(); ++i) {
        r.chi_s = std::max(r.chi_s, chi_static(snapshot(g, i), cfg));
        r.chi_3s = std::max(r.chi_3s, chi_static(smash(g, i, 1), cfg));
        delta = std::max(delta, max_degree(snapshot(g, i)));
    }
    r.lower = r.chi_3s;
    r.uppers["cube"] = static_cast<long long>(r.chi_s) * r.chi_s * r.chi_s;
    r.uppers["double"] = 2LL * r.chi_3s;
    r.uppers["degree"] = 5LL * delta + 1;
    if (grow_pace(g) <= 1)
        r.uppers["growpace1"] = delta + 2;
    for (auto& [name, ub] : r.uppers)
        if (r.lower > ub)
            throw std::logic_error("bound sandwich violated by " + name);
    return r;
}

}  // namespace tempo

#endif
