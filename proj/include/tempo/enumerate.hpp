#ifndef TEMPO_ENUMERATE_HPP
#define TEMPO_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "tempo/exact.hpp"
#include "tempo/graph.hpp"

namespace tempo {

enum class SnapshotKind { degree_bounded, bipartite, forest };

inline SnapshotKind parse_snapshot_kind(const std::string& s) {
    if (s == "degree")
        return SnapshotKind::degree_bounded;
    if (s == "bipartite")
        return SnapshotKind::bipartite;
    if (s == "forest")
        return SnapshotKind::forest;
    throw std::invalid_argument("unknown snapshot class " + s);
}

struct EnumerateOptions {
    SearchConfig search;
    int parallel_width = 1;
    bool canonical_pruning = true;
    // Signatures of start snapshots already fully explored (resume).
    const std::set<std::string>* skip_start = nullptr;
    // Called (serialized) when a start-snapshot branch completes.
    std::function<void(const std::string&)> on_start_done;
};

struct EnumerationResult {
    // Distinct witnesses up to relabeling, sorted by signature; chi is
    // the re-verified temporal chromatic number of each.
    std::vector<std::string> signatures;
    std::vector<TemporalGraph> witnesses;
    std::vector<int> witness_chi;
    long long labeled_sequences = 0;  // complete labeled sequences visited
    long long labeled_witnesses = 0;  // of which infeasible with k colors
    long long start_graphs = 0;       // start-snapshot branches explored
};

namespace detail {

using Bits = std::vector<std::uint64_t>;

inline Bits bits_make(std::size_t nbits, bool full) {
    Bits b((nbits + 63) / 64, full ? ~0ull : 0ull);
    if (full && nbits % 64)
        b.back() = (1ull << (nbits % 64)) - 1;
    return b;
}

inline void bits_and(Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] &= b[i];
}

inline bool bits_any(const Bits& a) {
    for (auto w : a)
        if (w)
            return true;
    return false;
}

// Canonical signature of a snapshot sequence: lexicographic minimum over
// all vertex relabelings of the serialized edge lists.
inline std::string sequence_signature(int n, const std::vector<std::vector<Edge>>& snaps) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s;
        for (auto& es : snaps) {
            std::vector<Edge> rel;
            rel.reserve(es.size());
            for (auto [u, v] : es)
                rel.push_back(make_edge(perm[u], perm[v]));
            std::sort(rel.begin(), rel.end());
            for (auto [u, v] : rel) {
                s += std::to_string(u);
                s += '-';
                s += std::to_string(v);
                s += ',';
            }
            s += '/';
        }
        if (best.empty() || s < best)
            best = std::move(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

struct EnumCtx {
    int n, T, delta, k;
    SnapshotKind kind;
    std::vector<Edge> slots;  // all potential edges, fixed order
    long long total;          // k^n coloring states
    // value_mask[v][a]: colorings assigning color a to vertex v.
    std::vector<std::vector<Bits>> value_mask;
    // proper_mask[e]: colorings proper on edge slots[e].
    std::vector<Bits> proper_mask;
    std::vector<std::vector<std::uint8_t>> color_of;  // [v][coloring]

    EnumCtx(int n_, int T_, int delta_, int k_, SnapshotKind kind_)
        : n(n_), T(T_), delta(delta_), k(k_), kind(kind_) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                slots.emplace_back(u, v);
        total = 1;
        for (int v = 0; v < n; ++v) {
            total *= k;
            if (total > (1 << 20))
                throw std::invalid_argument("enumeration state space too large");
        }
        color_of.assign(n, std::vector<std::uint8_t>(total));
        for (long long c = 0; c < total; ++c) {
            long long x = c;
            for (int v = 0; v < n; ++v) {
                color_of[v][c] = static_cast<std::uint8_t>(x % k);
                x /= k;
            }
        }
        value_mask.assign(n, std::vector<Bits>(k, bits_make(total, false)));
        for (long long c = 0; c < total; ++c)
            for (int v = 0; v < n; ++v)
                value_mask[v][color_of[v][c]][c / 64] |= 1ull << (c % 64);
        proper_mask.reserve(slots.size());
        for (auto [u, v] : slots) {
            Bits b = bits_make(total, true);
            for (int a = 0; a < k; ++a) {
                Bits both = value_mask[u][a];
                bits_and(both, value_mask[v][a]);
                for (std::size_t i = 0; i < b.size(); ++i)
                    b[i] &= ~both[i];
            }
            proper_mask.push_back(std::move(b));
        }
    }

    std::vector<Edge> mask_edges(std::uint32_t m) const {
        std::vector<Edge> es;
        for (std::size_t e = 0; e < slots.size(); ++e)
            if (m >> e & 1)
                es.push_back(slots[e]);
        return es;
    }

    bool class_ok(std::uint32_t m) const {
        std::vector<int> deg(n, 0);
        for (std::size_t e = 0; e < slots.size(); ++e)
            if (m >> e & 1) {
                ++deg[slots[e].first];
                ++deg[slots[e].second];
            }
        if (delta >= 0)
            for (int d : deg)
                if (d > delta)
                    return false;
        if (kind == SnapshotKind::degree_bounded)
            return true;
        StaticGraph s(n, mask_edges(m));
        if (kind == SnapshotKind::bipartite)
            return is_bipartite(s).has_value();
        // forest: acyclic via union-find
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        };
        for (auto [u, v] : s.edges) {
            int ru = find(u), rv = find(v);
            if (ru == rv)
                return false;
            parent[ru] = rv;
        }
        return true;
    }

    // Colorings proper on every edge of m.
    Bits proper(std::uint32_t m) const {
        Bits b = bits_make(total, true);
        for (std::size_t e = 0; e < slots.size(); ++e)
            if (m >> e & 1)
                bits_and(b, proper_mask[e]);
        return b;
    }

    // Colorings c' compatible with c across every edge of m:
    // for uv in m, c'(v) != c(u) and c'(u) != c(v).
    void accumulate_compatible(long long c, std::uint32_t m, Bits& out) const {
        Bits b = bits_make(total, true);
        for (std::size_t e = 0; e < slots.size(); ++e)
            if (m >> e & 1) {
                auto [u, v] = slots[e];
                const Bits& bu = value_mask[v][color_of[u][c]];
                const Bits& bv = value_mask[u][color_of[v][c]];
                for (std::size_t i = 0; i < b.size(); ++i)
                    b[i] &= ~(bu[i] | bv[i]);
            }
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] |= b[i];
    }

    // Grow-pace-1 successors: drop at most one edge, add at most one.
    std::vector<std::uint32_t> successors(std::uint32_t m) const {
        std::set<std::uint32_t> out;
        std::uint32_t all = (1u << slots.size()) - 1;
        std::vector<std::uint32_t> dropped{m};
        for (std::size_t e = 0; e < slots.size(); ++e)
            if (m >> e & 1)
                dropped.push_back(m & ~(1u << e));
        for (std::uint32_t d : dropped) {
            if (class_ok(d))
                out.insert(d);
            std::uint32_t addable = all & ~m;  // re-adding a dropped edge = no-op
            for (std::size_t e = 0; e < slots.size(); ++e)
                if (addable >> e & 1) {
                    std::uint32_t s = d | (1u << e);
                    if (class_ok(s))
                        out.insert(s);
                }
        }
        return {out.begin(), out.end()};
    }
};

struct EnumWorker {
    const EnumCtx& ctx;
    Budget budget;
    long long labeled_sequences = 0;
    long long labeled_witnesses = 0;
    std::map<std::string, TemporalGraph> witnesses;
    std::vector<std::uint32_t> stack;

    EnumWorker(const EnumCtx& c, const SearchConfig& cfg) : ctx(c), budget(cfg) {}

    void record_witness() {
        ++labeled_witnesses;
        std::vector<std::vector<Edge>> snaps;
        for (std::uint32_t m : stack)
            snaps.push_back(ctx.mask_edges(m));
        std::string sig = sequence_signature(ctx.n, snaps);
        if (!witnesses.count(sig))
            witnesses.emplace(sig, TemporalGraph(ctx.n, snaps));
    }

    // stack holds G_1..G_t; reach holds colorings of time t that extend a
    // valid prefix and are proper on G_{t-1} u G_t.
    void dfs(const Bits& reach) {
        if (!budget.step())
            throw resource_error(0, ctx.k);
        int t = static_cast<int>(stack.size());
        if (t == ctx.T) {
            ++labeled_sequences;
            if (!bits_any(reach))
                record_witness();
            return;
        }
        std::uint32_t cur = stack.back();
        for (std::uint32_t next : ctx.successors(cur)) {
            std::uint32_t pair = cur | next;
            Bits filtered = reach;
            bits_and(filtered, ctx.proper(next));  // now proper on full S_t
            Bits out = bits_make(ctx.total, false);
            for (long long c = 0; c < ctx.total; ++c)
                if (filtered[c / 64] >> (c % 64) & 1)
                    ctx.accumulate_compatible(c, pair, out);
            bits_and(out, ctx.proper(pair));
            stack.push_back(next);
            dfs(out);
            stack.pop_back();
        }
    }

    void run_start(std::uint32_t m) {
        stack.assign(1, m);
        dfs(ctx.proper(m));
    }
};

}  // namespace detail

// Exhaustive search over grow-pace-1 sequences of class-conforming
// snapshots on n labeled vertices, reporting those with no temporal
// k-coloring. Witnesses are deduplicated by a relabeling-canonical
// signature and re-verified with the exact solver; the result is
// deterministic regardless of parallel width.
inline EnumerationResult enumerate_growpace1(int n, int T, int delta, int k,
                                             SnapshotKind kind,
                                             const EnumerateOptions& opt = {}) {
    if (n < 1 || T < 1 || k < 1)
        throw std::invalid_argument("enumeration parameters must be positive");
    if (n > 6)
        throw std::invalid_argument("enumeration limited to n <= 6");
    detail::EnumCtx ctx(n, T, delta, k, kind);

    // Start snapshots, optionally reduced to canonical representatives.
    std::vector<std::uint32_t> starts;
    std::set<std::string> seen;
    std::vector<std::string> start_sigs;
    for (std::uint32_t m = 0; m < (1u << ctx.slots.size()); ++m) {
        if (!ctx.class_ok(m))
            continue;
        std::string sig = detail::sequence_signature(n, {ctx.mask_edges(m)});
        if (opt.canonical_pruning && !seen.insert(sig).second)
            continue;
        if (opt.skip_start && opt.skip_start->count(sig))
            continue;
        starts.push_back(m);
        start_sigs.push_back(sig);
    }

    int width = std::max(1, opt.parallel_width);
    std::vector<std::unique_ptr<detail::EnumWorker>> workers;
    for (int w = 0; w < width; ++w)
        workers.push_back(std::make_unique<detail::EnumWorker>(ctx, opt.search));
    std::mutex done_mutex;
    std::vector<std::exception_ptr> errors(width);
    auto body = [&](int w) {
        try {
            for (std::size_t i = w; i < starts.size(); i += width) {
                workers[w]->run_start(starts[i]);
                if (opt.on_start_done) {
                    std::lock_guard<std::mutex> lock(done_mutex);
                    opt.on_start_done(start_sigs[i]);
                }
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (width == 1) {
        body(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < width; ++w)
            threads.emplace_back(body, w);
        for (auto& th : threads)
            th.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    EnumerationResult res;
    res.start_graphs = static_cast<long long>(starts.size());
    std::map<std::string, TemporalGraph> merged;
    for (auto& w : workers) {
        res.labeled_sequences += w->labeled_sequences;
        res.labeled_witnesses += w->labeled_witnesses;
        merged.insert(w->witnesses.begin(), w->witnesses.end());
    }
    for (auto& [sig, g] : merged) {
        int chi = chi_temporal_direct(g, opt.search);
        if (chi <= k)
            throw std::logic_error("enumeration produced a false witness");
        res.signatures.push_back(sig);
        res.witnesses.push_back(g);
        res.witness_chi.push_back(chi);
    }
    return res;
}

}  // namespace tempo

#endif
