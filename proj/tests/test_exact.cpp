#include "doctest.h"
#include "oracles.hpp"
#include "tempo/exact.hpp"
#include "tempo/gadgets.hpp"
#include "tempo/reduction.hpp"

using namespace tempo;

TEST_CASE("chi_static on knowns") {
    CHECK(chi_static(StaticGraph(0, {})) == 0);
    CHECK(chi_static(StaticGraph(4, {})) == 1);
    CHECK(chi_static(detail::complete_graph(6)) == 6);
    StaticGraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(chi_static(c5) == 3);
}

TEST_CASE("chi_static matches the brute-force oracle on random graphs") {
    std::mt19937 rng(31);
    for (int it = 0; it < 60; ++it) {
        StaticGraph s = oracle::random_graph(rng, 4 + it % 5, 0.5);
        CHECK(chi_static(s) == oracle::brute_chromatic(s));
    }
}

TEST_CASE("k_coloring returns a proper witness and respects the budget") {
    std::mt19937 rng(32);
    StaticGraph s = oracle::random_graph(rng, 8, 0.5);
    int chi = chi_static(s);
    auto col = k_coloring(s, chi);
    REQUIRE(col);
    CHECK(check_proper(*col, s, 0, "witness").is_ok());
    CHECK(!k_coloring(s, chi - 1));
    SearchConfig tight;
    tight.node_budget = 1;
    StaticGraph c7(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6}});
    CHECK_THROWS_AS(chi_static(c7, tight), resource_error);
}

TEST_CASE("direct temporal search matches the layered brute force") {
    std::mt19937 rng(33);
    for (int it = 0; it < 40; ++it) {
        TemporalGraph g = oracle::random_temporal(rng, 4, 3, it % 2 ? 0.5 : 0.2);
        CHECK(chi_temporal_direct(g) == oracle::brute_temporal_chromatic(g));
    }
}

TEST_CASE("both exact routes agree on random instances") {
    std::mt19937 rng(34);
    for (int it = 0; it < 40; ++it) {
        TemporalGraph g = oracle::random_temporal(rng, 5, 4, it % 2 ? 0.5 : 0.2);
        CHECK(chi_temporal(g) == chi_temporal_direct(g));
    }
}

TEST_CASE("direct route emits a verifying witness at exactly chi colors") {
    std::mt19937 rng(35);
    for (int it = 0; it < 20; ++it) {
        TemporalGraph g = oracle::random_temporal(rng, 4, 3, 0.4);
        ColoringSeq seq;
        int chi = chi_temporal_direct(g, {}, &seq);
        CHECK(seq.palette_size == chi);
        CHECK(verify(g, seq).is_ok());
        CHECK(chi >= chi_static(smash(g, 2, 1)));
    }
}

TEST_CASE("extendable contract errors") {
    GadgetInstance g = gadget_p4_growpace();
    Coloring proper(4, 0);
    proper = {0, 1, 2, 3};
    CHECK_THROWS_AS(extendable(g.graph, 0, proper, 4), std::out_of_range);
    CHECK_THROWS_AS(extendable(g.graph, 4, proper, 4), std::out_of_range);
    Coloring improper(4, 0);
    CHECK_THROWS_AS(extendable(g.graph, 2, improper, 4), std::invalid_argument);
}

TEST_CASE("extendable is monotone in k") {
    std::mt19937 rng(36);
    for (int it = 0; it < 25; ++it) {
        TemporalGraph g = oracle::random_temporal(rng, 4, 3, 0.4);
        ColoringSeq seq;
        int chi = chi_temporal_direct(g, {}, &seq);
        for (int k = chi; k <= chi + 2; ++k) {
            bool lo = extendable(g, 1, seq.per_time[0], k);
            bool hi = extendable(g, 1, seq.per_time[0], k + 1);
            if (lo)
                CHECK(hi);
        }
    }
}

TEST_CASE("extendable with an edgeless future accepts reusing the coloring") {
    TemporalGraph g(3, {{{0, 1}, {1, 2}}, {}, {}});
    Coloring c1{0, 1, 0};
    CHECK(extendable(g, 1, c1, 2));
}

TEST_CASE("bound report on knowns") {
    GadgetInstance g = gadget_paths_k6();
    BoundReport r = bound_report(g.graph);
    CHECK(r.chi_s == 2);
    CHECK(r.chi_3s == 6);
    CHECK(r.lower == 6);
    CHECK(r.uppers.at("cube") == 8);
    CHECK(r.uppers.at("double") == 12);
    TemporalGraph empty(3, {{}, {}});
    BoundReport e = bound_report(empty);
    CHECK(e.chi_s == 1);
    CHECK(e.lower == 1);
    CHECK(e.uppers.at("cube") == 1);
}
