#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "tempo/exact.hpp"
#include "tempo/gadgets.hpp"
#include "tempo/io.hpp"
#include "tempo/reduction.hpp"

using namespace tempo;

TEST_CASE("every gadget passes its structural self-check") {
    for (const std::string& name : gadget_names()) {
        CAPTURE(name);
        GadgetInstance g = make_gadget(name, 2);
        CHECK_NOTHROW(g.self_check());
        CHECK(g.vertex_names.size() == static_cast<std::size_t>(g.graph.n));
    }
}

TEST_CASE("chromatic claims are reproduced exactly") {
    CHECK(chi_temporal(gadget_p4_growpace().graph) == 4);
    CHECK(chi_temporal(gadget_dup_k4().graph) == 4);
    CHECK(chi_temporal_direct(gadget_delta3_growpace().graph) == 5);
}

TEST_CASE("bipartite8 smashes to K_8 while every snapshot is bipartite") {
    GadgetInstance g = gadget_bipartite8();
    for (int i = 1; i <= 3; ++i)
        CHECK(is_bipartite(snapshot(g.graph, i)));
    StaticGraph s2 = smash(g.graph, 2, 1);
    CHECK(s2.edges.size() == 28);
    CHECK(chi_static(s2) == 8);
}

TEST_CASE("paths_k6 union of three paths is K_6") {
    GadgetInstance g = gadget_paths_k6();
    CHECK(smash(g.graph, 2, 1).edges.size() == 15);
    CHECK(chi_static(smash(g.graph, 2, 1)) == 6);
    for (int i = 1; i <= 3; ++i)
        CHECK(max_degree(snapshot(g.graph, i)) == 2);
}

TEST_CASE("degenerate5d structure for d in 1..3") {
    for (int d = 1; d <= 3; ++d) {
        CAPTURE(d);
        GadgetInstance g = gadget_degenerate5d(d);
        CHECK_NOTHROW(g.self_check());
        for (int i = 1; i <= 3; ++i)
            CHECK(degeneracy(snapshot(g.graph, i)).d == d);
        StaticGraph sm = smash(g.graph, 2, 1);
        CHECK(sm.n == 5 * d);
        CHECK(static_cast<int>(sm.edges.size()) == 5 * d * (5 * d - 1) / 2);
    }
    CHECK_THROWS_AS(gadget_degenerate5d(0), std::invalid_argument);
}

TEST_CASE("bounded3delta structure for delta in 1..3") {
    for (int delta = 1; delta <= 3; ++delta) {
        CAPTURE(delta);
        GadgetInstance g = gadget_bounded3delta(delta);
        CHECK_NOTHROW(g.self_check());
        for (int i = 1; i <= 3; ++i)
            CHECK(max_degree(snapshot(g.graph, i)) == delta);
        StaticGraph sm = smash(g.graph, 2, 1);
        CHECK(sm.n == 3 * delta + 1);
        CHECK(static_cast<int>(sm.edges.size()) ==
              (3 * delta + 1) * 3 * delta / 2);
    }
}

TEST_CASE("seven_color_paths shipped coloring and extendability") {
    GadgetInstance g = gadget_seven_color_paths();
    const auto& [t, c2] = g.fixed_colorings.at("c2");
    CHECK(t == 2);
    CHECK(check_proper(c2, smash(g.graph, 2, 1), 2, "c2").is_ok());
    CHECK(check_proper(c2, graph_union(snapshot(g.graph, 2), snapshot(g.graph, 3)),
                       2, "c2").is_ok());
    CHECK(1 + *std::max_element(c2.begin(), c2.end()) == 6);
    CHECK(!extendable(g.graph, 2, c2, 6));
    CHECK(extendable(g.graph, 2, c2, 7));
}

TEST_CASE("delta3_growpace smashes are K_5 minus one specific edge") {
    GadgetInstance g = gadget_delta3_growpace();
    StaticGraph s2 = smash(g.graph, 2, 1);
    CHECK(s2.edges.size() == 9);
    CHECK(!s2.has_edge(1, 3));  // b-d missing
    StaticGraph s3 = smash(g.graph, 3, 1);
    CHECK(s3.edges.size() == 9);
    CHECK(!s3.has_edge(0, 2));  // a-c missing
    CHECK(grow_pace(g.graph) == 1);
}

TEST_CASE("gadget generation is byte-stable") {
    for (const std::string& name : gadget_names()) {
        std::ostringstream a, b;
        write_temporal_graph(a, make_gadget(name, 2).graph);
        write_temporal_graph(b, make_gadget(name, 2).graph);
        CHECK(a.str() == b.str());
        CHECK(!a.str().empty());
    }
}

TEST_CASE("unknown gadget names are rejected") {
    CHECK_THROWS_AS(make_gadget("nope"), std::invalid_argument);
}
