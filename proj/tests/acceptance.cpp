// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// fails. Each criterion carries a wall-clock limit that is enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

#include "oracles.hpp"
#include "tempo/constructive.hpp"
#include "tempo/enumerate.hpp"
#include "tempo/gadgets.hpp"
#include "tempo/reduction.hpp"

using namespace tempo;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds,
               const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = error.empty() && secs <= limit_seconds;
    if (!ok)
        ++failures;
    std::printf("[%s] %2d %-34s %7.2f s (limit %g s)%s%s\n", ok ? "PASS" : "FAIL",
                id, name.c_str(), secs, limit_seconds,
                error.empty() ? "" : " -- ", error.c_str());
    std::fflush(stdout);
}

void require(bool cond, const std::string& what) {
    if (!cond)
        throw std::runtime_error(what);
}

int palette_for_snapshots(const TemporalGraph& g, bool smashes) {
    int k = 1;
    for (int i = 1; i <= g.lifetime(); ++i) {
        Coloring x = proper_coloring(smashes ? smash(g, i, 1) : snapshot(g, i));
        k = std::max(k, x.empty() ? 1 : 1 + *std::max_element(x.begin(), x.end()));
    }
    return k;
}

}  // namespace

int main() {
    criterion(1, "p4 chi = 4 on both routes", 1.0, [] {
        TemporalGraph g = gadget_p4_growpace().graph;
        require(chi_temporal(g) == 4, "reduction route != 4");
        require(chi_temporal_direct(g) == 4, "direct route != 4");
    });

    criterion(2, "delta3 chi = 5, smash structure", 5.0, [] {
        GadgetInstance g = gadget_delta3_growpace();
        g.self_check();  // includes S_2 = K_5 - bd and S_3 = K_5 - ac
        require(chi_temporal(g.graph) == 5, "chi != 5");
        require(chi_temporal_direct(g.graph) == 5, "direct chi != 5");
    });

    criterion(3, "dup_k4 chi = 4, square coloring", 1.0, [] {
        TemporalGraph g = gadget_dup_k4().graph;
        require(chi_temporal(g) == 4, "chi != 4");
        SnapshotColorings xs;
        xs.k = 2;
        for (int j = 1; j <= 2; ++j)
            xs.per_time.push_back(proper_coloring(snapshot(g, 2 * j - 1)));
        ColoringSeq seq = color_square_duplicated(g, xs);
        require(seq.palette_size == 4, "palette != 4");
        require(verify(g, seq).is_ok(), "square coloring failed verification");
    });

    criterion(4, "bipartite8 sandwich chi = 8", 5.0, [] {
        TemporalGraph g = gadget_bipartite8().graph;
        for (int i = 1; i <= 3; ++i)
            require(is_bipartite(snapshot(g, i)).has_value(), "snapshot not bipartite");
        require(chi_static(smash(g, 2, 1)) == 8, "chi(S_2) != 8");
        SnapshotColorings xs;
        xs.k = 2;
        for (int i = 1; i <= 3; ++i) {
            auto p = is_bipartite(snapshot(g, i));
            Coloring x(g.n, 0);
            for (int v : p->right)
                x[v] = 1;
            xs.per_time.push_back(std::move(x));
        }
        ColoringSeq cube = color_cube(g, xs);
        require(cube.palette_size == 8, "cube palette != 8");
        require(verify(g, cube).is_ok(), "cube coloring failed verification");
        // lower 8 from S_2, upper 8 from the verified cube coloring
        require(chi_temporal_direct(g) == 8, "chi != 8");
    });

    criterion(5, "paths_k6 chi(S_2) = 6, double = 12", 1.0, [] {
        TemporalGraph g = gadget_paths_k6().graph;
        for (int i = 1; i <= 3; ++i)
            require(max_degree(snapshot(g, i)) <= 2 &&
                        static_cast<int>(snapshot(g, i).edges.size()) == 5,
                    "snapshot is not a spanning path");
        require(chi_static(smash(g, 2, 1)) == 6, "chi(S_2) != 6");
        ColoringSeq seq = detail::run_stepper(Method::twice, g, 6);
        require(seq.palette_size == 12, "palette != 12");
        require(verify(g, seq).is_ok(), "double coloring failed verification");
    });

    criterion(6, "degenerate5d d in 1..3", 5.0, [] {
        for (int d = 1; d <= 3; ++d) {
            TemporalGraph g = gadget_degenerate5d(d).graph;
            for (int i = 1; i <= 3; ++i)
                require(degeneracy(snapshot(g, i)).d == d, "degeneracy != d");
            StaticGraph sm = smash(g, 2, 1);
            require(sm.n == 5 * d &&
                        static_cast<int>(sm.edges.size()) == 5 * d * (5 * d - 1) / 2,
                    "smash is not K_{5d}");
        }
    });

    criterion(7, "bounded3delta delta in 1..3", 1.0, [] {
        for (int delta = 1; delta <= 3; ++delta) {
            TemporalGraph g = gadget_bounded3delta(delta).graph;
            for (int i = 1; i <= 3; ++i)
                require(max_degree(snapshot(g, i)) == delta, "degree bound broken");
            StaticGraph sm = smash(g, 2, 1);
            int m = 3 * delta + 1;
            require(sm.n == m && static_cast<int>(sm.edges.size()) == m * (m - 1) / 2,
                    "smash is not K_{3delta+1}");
        }
    });

    criterion(8, "seven_color_paths 6 vs 7 extendability", 30.0, [] {
        GadgetInstance g = gadget_seven_color_paths();
        const auto& [t, c2] = g.fixed_colorings.at("c2");
        require(!extendable(g.graph, t, c2, 6), "extendable at k=6");
        require(extendable(g.graph, t, c2, 7), "not extendable at k=7");
    });

    criterion(9, "oracle equivalence, 200 instances", 300.0, [] {
        std::mt19937 rng(901);
        std::uniform_int_distribution<> nd(2, 5), td(1, 4), kd(1, 4);
        for (int it = 0; it < 200; ++it) {
            double p = it % 2 ? 0.5 : 0.2;
            TemporalGraph g = oracle::random_temporal(rng, nd(rng), td(rng), p);
            StaticReduction r = to_static(g);
            // (a) verify <=> properness of the flattened coloring
            ColoringSeq seq;
            seq.palette_size = kd(rng);
            std::uniform_int_distribution<> cd(0, seq.palette_size - 1);
            for (int i = 0; i < g.lifetime(); ++i) {
                Coloring c(g.n);
                for (int& x : c)
                    x = cd(rng);
                seq.per_time.push_back(std::move(c));
            }
            Coloring flat(r.graph.n);
            for (int i = 1; i <= g.lifetime(); ++i)
                for (int v = 0; v < g.n; ++v)
                    flat[r.flat(v, i)] = seq.per_time[i - 1][v];
            require(verify(g, seq).is_ok() ==
                        check_proper(flat, r.graph, 0, "flat").is_ok(),
                    "verify / static properness mismatch");
            // (b) both exact routes agree
            int via_static = chi_static(r.graph);
            int direct = chi_temporal_direct(g);
            require(via_static == direct, "exact routes disagree");
            // (c) interval reduction decides chi <= 2
            require(decide_2colorable(g).yes == (direct <= 2),
                    "2-colorability mismatch");
        }
    });

    criterion(10, "constructive properties, 100+ each", 300.0, [] {
        std::mt19937 rng(1001);
        for (int it = 0; it < 100; ++it) {
            TemporalGraph g = oracle::random_temporal(rng, 5, 2 + it % 3, 0.4);
            // cube
            SnapshotColorings xs;
            for (int i = 1; i <= g.lifetime(); ++i)
                xs.per_time.push_back(proper_coloring(snapshot(g, i)));
            xs.k = palette_for_snapshots(g, false);
            ColoringSeq cube = color_cube(g, xs);
            require(cube.palette_size == xs.k * xs.k * xs.k && verify(g, cube).is_ok(),
                    "cube violation");
            // double
            int k = palette_for_snapshots(g, true);
            std::vector<Coloring> sm;
            for (int i = 1; i <= g.lifetime(); ++i)
                sm.push_back(proper_coloring(smash(g, i, 1)));
            ColoringSeq dbl = color_double(g, sm, k);
            require(dbl.palette_size == 2 * k && verify(g, dbl).is_ok(),
                    "double violation");
            // dup-square on the duplicated graph
            TemporalGraph dup = oracle::duplicate(g);
            SnapshotColorings dxs = xs;
            ColoringSeq sq = color_square_duplicated(dup, dxs);
            require(sq.palette_size == xs.k * xs.k && verify(dup, sq).is_ok(),
                    "square violation");
        }
        for (int it = 0; it < 100; ++it) {
            int delta = 1 + it % 3;
            TemporalGraph g = oracle::random_bounded_temporal(rng, 6, 2 + it % 3, delta, 0.6);
            ColoringSeq seq = color_bounded_degree(g, delta);
            require(seq.palette_size == 5 * delta + 1 && verify(g, seq).is_ok(),
                    "5delta+1 violation");
            TemporalGraph dup = oracle::duplicate(g);
            ColoringSeq dseq = color_bounded_degree_duplicated(dup, delta);
            require(dseq.palette_size == 3 * delta + 1 && verify(dup, dseq).is_ok(),
                    "3delta+1 violation");
        }
        for (int it = 0; it < 100; ++it) {
            int delta = 1 + it % 3;
            TemporalGraph g = oracle::random_growpace1(rng, 5 + it % 3, 2 + it % 4, delta);
            ColoringSeq seq = color_growpace1(g, delta);
            require(seq.palette_size == delta + 2 && verify(g, seq).is_ok(),
                    "delta+2 violation");
        }
        // prefix determinism under divergent suffixes
        for (int it = 0; it < 25; ++it) {
            TemporalGraph a = oracle::random_growpace1(rng, 5, 4, 2);
            std::vector<std::vector<Edge>> tail;
            for (int i = 1; i <= 3; ++i)
                tail.push_back(snapshot(a, i).edges);
            std::vector<Edge> last = tail.back();
            if (!last.empty())
                last.pop_back();
            tail.push_back(last);
            TemporalGraph b(a.n, tail);
            OnlineStepper sa(Method::growpace1, a.n, 2), sb(Method::growpace1, b.n, 2);
            for (int i = 1; i <= 3; ++i)
                require(sa.feed(snapshot(a, i)) == sb.feed(snapshot(b, i)),
                        "prefix determinism broken");
            sa.feed(snapshot(a, 4));
            sb.feed(snapshot(b, 4));
        }
    });

    criterion(11, "enumeration n=4 T=4 delta=2 k=3", 600.0, [] {
        EnumerateOptions one, two;
        one.parallel_width = 1;
        two.parallel_width = 2;
        EnumerationResult a =
            enumerate_growpace1(4, 4, 2, 3, SnapshotKind::degree_bounded, one);
        EnumerationResult b =
            enumerate_growpace1(4, 4, 2, 3, SnapshotKind::degree_bounded, two);
        require(!a.witnesses.empty(), "no witness found");
        require(a.signatures == b.signatures, "widths disagree");
        bool found = false;
        for (std::size_t i = 0; i < a.witnesses.size() && !found; ++i) {
            if (a.witness_chi[i] != 4 || grow_pace(a.witnesses[i]) > 1)
                continue;
            bool all_paths = true;
            for (int t = 1; t <= a.witnesses[i].lifetime(); ++t)
                all_paths = all_paths && max_degree(snapshot(a.witnesses[i], t)) <= 2;
            found = all_paths;
        }
        require(found, "no grow-pace-1 path witness with chi 4");
    });

    criterion(12, "bound sandwich on all gadgets", 60.0, [] {
        for (const std::string& name : gadget_names()) {
            GadgetInstance g = make_gadget(name, 2);
            BoundReport r = bound_report(g.graph);
            int chi = chi_temporal(g.graph);
            require(r.lower <= chi, name + ": lower bound broken");
            require(chi <= r.uppers.at("cube"), name + ": cube bound broken");
            require(chi <= r.uppers.at("double"), name + ": double bound broken");
            if (g.claim.chi_t)
                require(chi == *g.claim.chi_t, name + ": claimed chi mismatch");
        }
    });

    if (failures)
        std::printf("%d criterion(s) FAILED\n", failures);
    else
        std::printf("all 12 criteria passed\n");
    return failures ? 1 : 0;
}
