#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "tempo/io.hpp"

using namespace tempo;

namespace {

TemporalGraph roundtrip(const TemporalGraph& g) {
    std::ostringstream out;
    write_temporal_graph(out, g);
    std::istringstream in(out.str());
    return read_temporal_graph(in);
}

}  // namespace

TEST_CASE("temporal graph round-trips through the text format") {
    std::mt19937 rng(61);
    for (int it = 0; it < 50; ++it) {
        TemporalGraph g = oracle::random_temporal(rng, 1 + it % 7, 1 + it % 4, 0.4);
        CHECK(roundtrip(g) == g);
    }
}

TEST_CASE("temporal graph parser accepts comments and blank lines") {
    std::istringstream in(
        "# a graph\n tg 1\nn 3\nT 2\n\nsnapshot 1 # first\ne 0 1\nsnapshot 2\n");
    TemporalGraph g = read_temporal_graph(in);
    CHECK(g.n == 3);
    CHECK(g.lifetime() == 2);
    CHECK(snapshot(g, 1).has_edge(0, 1));
    CHECK(snapshot(g, 2).edges.empty());
}

TEST_CASE("temporal graph parser rejects malformed input") {
    auto bad = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_temporal_graph(in), std::invalid_argument);
    };
    bad("");
    bad("tg 2\nn 1\nT 1\nsnapshot 1\n");
    bad("tg 1\nn 2\nT 1\nsnapshot 1\ne 0 0\n");        // self-loop
    bad("tg 1\nn 2\nT 1\nsnapshot 1\ne 1 0\n");        // wrong endpoint order
    bad("tg 1\nn 2\nT 1\nsnapshot 1\ne 0 2\n");        // out of range
    bad("tg 1\nn 2\nT 1\nsnapshot 1\ne 0 1\ne 0 1\n"); // duplicate
    bad("tg 1\nn 2\nT 2\nsnapshot 2\nsnapshot 1\n");   // out of order
    bad("tg 1\nn 2\nT 2\nsnapshot 1\n");               // missing snapshot
    bad("tg 1\nn 2\nT 1\nsnapshot 1\nsnapshot 2\n");   // trailing content
    bad("tg 1\nn -1\nT 1\nsnapshot 1\n");
    bad("tg 1\nn 2\nT 0\n");
    bad("tg 1\nn 2\nT 1\nsnapshot 1\ne 0 x\n");
}

TEST_CASE("coloring sequence round-trips and validates") {
    ColoringSeq seq{{{0, 2, 1}, {1, 0, 2}}, 3};
    std::ostringstream out;
    write_coloring_seq(out, seq);
    std::istringstream in(out.str());
    ColoringSeq back = read_coloring_seq(in);
    CHECK(back.palette_size == 3);
    CHECK(back.per_time == seq.per_time);

    auto bad = [](const std::string& text) {
        std::istringstream bin(text);
        CHECK_THROWS_AS(read_coloring_seq(bin), std::invalid_argument);
    };
    bad("tc 1\nk 2\n");                       // no rows
    bad("tc 1\nk 2\nt 2 0 1\n");              // wrong first time
    bad("tc 1\nk 2\nt 1 0 2\n");              // color out of palette
    bad("tc 1\nk 2\nt 1 0 1\nt 2 0\n");       // ragged rows
}

TEST_CASE("static graph format round-trips") {
    std::mt19937 rng(62);
    for (int it = 0; it < 30; ++it) {
        StaticGraph s = oracle::random_graph(rng, 1 + it % 8, 0.4);
        std::ostringstream out;
        write_static_graph(out, s);
        std::istringstream in(out.str());
        CHECK(read_static_graph(in) == s);
    }
}

TEST_CASE("names sidecar round-trips") {
    std::vector<std::string> names{"a", "b", "c"};
    std::ostringstream out;
    write_names(out, names);
    std::istringstream in(out.str());
    CHECK(read_names(in) == names);
    std::istringstream bad("v 1 b\n");
    CHECK_THROWS_AS(read_names(bad), std::invalid_argument);
}

TEST_CASE("flat map covers every (vertex, time) pair once") {
    std::ostringstream out;
    write_flat_map(out, 2, 3);
    std::istringstream in(out.str());
    std::string tag;
    int flat, v, t, rows = 0;
    while (in >> tag >> flat >> v >> t) {
        CHECK(tag == "m");
        CHECK(flat == (t - 1) * 2 + v);
        ++rows;
    }
    CHECK(rows == 6);
}
