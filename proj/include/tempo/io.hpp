#ifndef TEMPO_IO_HPP
#define TEMPO_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>

#include "tempo/coloring.hpp"
#include "tempo/graph.hpp"

// Line-oriented text formats. '#' starts a comment; blank lines are
// ignored. All parse failures throw std::invalid_argument.

namespace tempo {

namespace detail {

// Next non-empty line with comments stripped, tokenized.
inline bool next_tokens(std::istream& in, std::vector<std::string>& toks) {
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        toks.clear();
        std::string t;
        while (ls >> t)
            toks.push_back(t);
        if (!toks.empty())
            return true;
    }
    return false;
}

inline int parse_int(const std::string& s, const std::string& what) {
    size_t pos = 0;
    int v;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad " + what + ": " + s);
    }
    if (pos != s.size())
        throw std::invalid_argument("bad " + what + ": " + s);
    return v;
}

inline void expect_header(std::istream& in, const std::string& magic) {
    std::vector<std::string> toks;
    if (!next_tokens(in, toks) || toks.size() != 2 || toks[0] != magic || toks[1] != "1")
        throw std::invalid_argument("expected header '" + magic + " 1'");
}

inline Edge parse_edge_line(const std::vector<std::string>& toks, int n) {
    if (toks.size() != 3)
        throw std::invalid_argument("bad edge line");
    int u = parse_int(toks[1], "endpoint");
    int v = parse_int(toks[2], "endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("self-loop rejected");
    if (u > v)
        throw std::invalid_argument("edge endpoints must satisfy u < v");
    return {u, v};
}

inline void check_no_duplicates(const std::vector<Edge>& es, const std::string& where) {
    std::vector<Edge> sorted = es;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate edge in " + where);
}

}  // namespace detail

// --- temporal graph: `tg 1` ---

inline TemporalGraph read_temporal_graph(std::istream& in) {
    using detail::next_tokens;
    using detail::parse_int;
    detail::expect_header(in, "tg");
    std::vector<std::string> toks;
    if (!next_tokens(in, toks) || toks.size() != 2 || toks[0] != "n")
        throw std::invalid_argument("expected 'n <N>'");
    int n = parse_int(toks[1], "n");
    if (n < 0)
        throw std::invalid_argument("n must be non-negative");
    if (!next_tokens(in, toks) || toks.size() != 2 || toks[0] != "T")
        throw std::invalid_argument("expected 'T <T>'");
    int T = parse_int(toks[1], "T");
    if (T < 1)
        throw std::invalid_argument("T must be positive");

    std::vector<std::vector<Edge>> snaps;
    if (!next_tokens(in, toks))
        throw std::invalid_argument("missing snapshots");
    for (int t = 1; t <= T; ++t) {
        if (toks.size() != 2 || toks[0] != "snapshot" || parse_int(toks[1], "t") != t)
            throw std::invalid_argument("expected 'snapshot " + std::to_string(t) + "'");
        std::vector<Edge> es;
        bool more;
        while ((more = next_tokens(in, toks)) && toks[0] == "e")
            es.push_back(detail::parse_edge_line(toks, n));
        detail::check_no_duplicates(es, "snapshot " + std::to_string(t));
        snaps.push_back(std::move(es));
        if (!more) {
            if (t < T)
                throw std::invalid_argument("missing snapshot " + std::to_string(t + 1));
            return TemporalGraph(n, snaps);
        }
    }
    throw std::invalid_argument("trailing content after last snapshot");
}

inline void write_temporal_graph(std::ostream& out, const TemporalGraph& g) {
    out << "tg 1\n" << "n " << g.n << "\n" << "T " << g.lifetime() << "\n";
    for (int t = 1; t <= g.lifetime(); ++t) {
        out << "snapshot " << t << "\n";
        for (auto [u, v] : snapshot(g, t).edges)
            out << "e " << u << " " << v << "\n";
    }
}

// --- coloring sequence: `tc 1` (colors are 0-based on disk and in memory) ---

inline ColoringSeq read_coloring_seq(std::istream& in) {
    using detail::next_tokens;
    using detail::parse_int;
    detail::expect_header(in, "tc");
    std::vector<std::string> toks;
    if (!next_tokens(in, toks) || toks.size() != 2 || toks[0] != "k")
        throw std::invalid_argument("expected 'k <palette>'");
    ColoringSeq seq;
    seq.palette_size = parse_int(toks[1], "k");
    if (seq.palette_size < 0)
        throw std::invalid_argument("palette must be non-negative");
    size_t n = 0;
    while (next_tokens(in, toks)) {
        if (toks.size() < 2 || toks[0] != "t")
            throw std::invalid_argument("expected 't <t> <colors...>'");
        int t = parse_int(toks[1], "t");
        if (t != static_cast<int>(seq.per_time.size()) + 1)
            throw std::invalid_argument("time rows must be 1..T in order");
        Coloring c;
        for (size_t i = 2; i < toks.size(); ++i) {
            int col = parse_int(toks[i], "color");
            if (col < 0 || col >= seq.palette_size)
                throw std::invalid_argument("color out of palette range");
            c.push_back(col);
        }
        if (seq.per_time.empty())
            n = c.size();
        else if (c.size() != n)
            throw std::invalid_argument("inconsistent row length");
        seq.per_time.push_back(std::move(c));
    }
    if (seq.per_time.empty())
        throw std::invalid_argument("empty coloring sequence");
    return seq;
}

inline void write_coloring_seq(std::ostream& out, const ColoringSeq& seq) {
    out << "tc 1\n" << "k " << seq.palette_size << "\n";
    for (size_t t = 0; t < seq.per_time.size(); ++t) {
        out << "t " << t + 1;
        for (int c : seq.per_time[t])
            out << " " << c;
        out << "\n";
    }
}

// --- static graph: `sg 1` ---

inline StaticGraph read_static_graph(std::istream& in) {
    using detail::next_tokens;
    detail::expect_header(in, "sg");
    std::vector<std::string> toks;
    if (!next_tokens(in, toks) || toks.size() != 2 || toks[0] != "n")
        throw std::invalid_argument("expected 'n <N>'");
    int n = detail::parse_int(toks[1], "n");
    if (n < 0)
        throw std::invalid_argument("n must be non-negative");
    std::vector<Edge> es;
    while (next_tokens(in, toks)) {
        if (toks[0] != "e")
            throw std::invalid_argument("expected edge line");
        es.push_back(detail::parse_edge_line(toks, n));
    }
    detail::check_no_duplicates(es, "static graph");
    return StaticGraph(n, es);
}

inline void write_static_graph(std::ostream& out, const StaticGraph& s) {
    out << "sg 1\n" << "n " << s.n << "\n";
    for (auto [u, v] : s.edges)
        out << "e " << u << " " << v << "\n";
}

// --- sidecars ---

// Flat-vertex map for the static reduction: `m <flat> <v> <t>` lines.
inline void write_flat_map(std::ostream& out, int n, int T) {
    for (int t = 1; t <= T; ++t)
        for (int v = 0; v < n; ++v)
            out << "m " << (t - 1) * n + v << " " << v << " " << t << "\n";
}

// Vertex label sidecar: `v <index> <label>` lines.
inline void write_names(std::ostream& out, const std::vector<std::string>& names) {
    for (size_t i = 0; i < names.size(); ++i)
        out << "v " << i << " " << names[i] << "\n";
}

inline std::vector<std::string> read_names(std::istream& in) {
    std::vector<std::string> names;
    std::vector<std::string> toks;
    while (detail::next_tokens(in, toks)) {
        if (toks.size() != 3 || toks[0] != "v")
            throw std::invalid_argument("expected 'v <index> <label>'");
        int idx = detail::parse_int(toks[1], "index");
        if (idx != static_cast<int>(names.size()))
            throw std::invalid_argument("name indices must be 0..n-1 in order");
        names.push_back(toks[2]);
    }
    return names;
}

}  // namespace tempo

#endif
