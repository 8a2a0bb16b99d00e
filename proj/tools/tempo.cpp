// Command-line front-end: file I/O and exit-code plumbing over the
// library. Exit codes: 0 success / positive answer, 1 negative answer,
// 2 parse or contract error, 3 budget exhausted.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "tempo/constructive.hpp"
#include "tempo/enumerate.hpp"
#include "tempo/gadgets.hpp"
#include "tempo/io.hpp"
#include "tempo/reduction.hpp"

namespace {

tempo::TemporalGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    return tempo::read_temporal_graph(in);
}

tempo::ColoringSeq load_coloring(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    return tempo::read_coloring_seq(in);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot open " + path + " for writing");
    return out;
}

std::string label(const std::vector<std::string>& names, int v) {
    if (v >= 0 && v < static_cast<int>(names.size()))
        return names[v] + "(" + std::to_string(v) + ")";
    return std::to_string(v);
}

tempo::SearchConfig make_config(long long budget, double time_budget) {
    tempo::SearchConfig cfg;
    if (budget <= 0)
        if (const char* env = std::getenv("TEMPO_BUDGET"))
            budget = std::atoll(env);
    if (budget > 0)
        cfg.node_budget = budget;
    if (time_budget > 0)
        cfg.time_budget_seconds = time_budget;
    return cfg;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path,
               const std::string& names_path) {
    tempo::TemporalGraph g = load_graph(graph_path);
    tempo::ColoringSeq seq = load_coloring(coloring_path);
    std::vector<std::string> names;
    if (!names_path.empty()) {
        std::ifstream in(names_path);
        if (!in)
            throw std::invalid_argument("cannot open " + names_path);
        names = tempo::read_names(in);
    }
    tempo::Verdict v = tempo::verify(g, seq);
    if (v.is_ok()) {
        std::cout << "OK k=" << seq.palette_size << "\n";
        return 0;
    }
    const char* kind = v.status == tempo::VerdictStatus::improper ? "improper" : "incompatible";
    std::cout << "VIOLATION " << kind << " t=" << v.time << " u=" << v.edge.first
              << " v=" << v.edge.second << "\n";
    std::cout << "at time " << v.time << ", edge " << label(names, v.edge.first) << "-"
              << label(names, v.edge.second) << ": " << v.detail << "\n";
    return 1;
}

int cmd_color(const std::string& graph_path, const std::string& method,
              int delta, const std::string& out_path) {
    tempo::TemporalGraph g = load_graph(graph_path);
    int T = g.lifetime();
    auto palette_need = [](const tempo::Coloring& c) {
        return c.empty() ? 1 : 1 + *std::max_element(c.begin(), c.end());
    };
    tempo::ColoringSeq seq;
    if (method == "cube" || method == "dup-square") {
        int k = 1;
        for (int i = 1; i <= T; ++i)
            k = std::max(k, palette_need(tempo::proper_coloring(tempo::snapshot(g, i))));
        seq = tempo::detail::run_stepper(method == "cube" ? tempo::Method::cube
                                                          : tempo::Method::dup_square,
                                         g, k);
    } else if (method == "double") {
        int k = 1;
        for (int i = 1; i <= T; ++i)
            k = std::max(k, palette_need(tempo::proper_coloring(tempo::smash(g, i, 1))));
        seq = tempo::detail::run_stepper(tempo::Method::twice, g, k);
    } else {
        int d = delta;
        if (d < 0) {
            d = 0;
            for (int i = 1; i <= T; ++i)
                d = std::max(d, tempo::max_degree(tempo::snapshot(g, i)));
        }
        if (method == "bounded")
            seq = tempo::color_bounded_degree(g, d);
        else if (method == "dup-bounded")
            seq = tempo::color_bounded_degree_duplicated(g, d);
        else if (method == "growpace1")
            seq = tempo::color_growpace1(g, d);
        else
            throw std::invalid_argument("unknown method " + method);
    }
    if (!tempo::verify(g, seq).is_ok())
        throw std::logic_error("produced coloring failed verification");
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        tempo::write_coloring_seq(out, seq);
    } else {
        tempo::write_coloring_seq(std::cout, seq);
    }
    std::cerr << "OK method=" << method << " k=" << seq.palette_size << "\n";
    return 0;
}

int cmd_chi(const std::string& graph_path, long long budget, double time_budget,
            bool direct) {
    tempo::TemporalGraph g = load_graph(graph_path);
    tempo::SearchConfig cfg = make_config(budget, time_budget);
    int chi = direct ? tempo::chi_temporal_direct(g, cfg) : tempo::chi_temporal(g, cfg);
    std::cout << chi << "\n";
    return 0;
}

int cmd_two_colorable(const std::string& graph_path, const std::string& out_path) {
    tempo::TemporalGraph g = load_graph(graph_path);
    tempo::TwoColorable r = tempo::decide_2colorable(g);
    if (!r.yes) {
        std::cout << "NO\n";
        return 1;
    }
    if (!tempo::verify(g, *r.witness).is_ok())
        throw std::logic_error("2-coloring witness failed verification");
    std::cout << "YES k=2\n";
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        tempo::write_coloring_seq(out, *r.witness);
    }
    return 0;
}

int cmd_reduce(const std::string& graph_path, bool to_static_flag, bool to_col2_flag,
               const std::string& out_path, const std::string& map_path) {
    tempo::TemporalGraph g = load_graph(graph_path);
    if (to_static_flag == to_col2_flag)
        throw std::invalid_argument("pick exactly one of --static / --col2");
    if (to_static_flag) {
        tempo::StaticReduction r = tempo::to_static(g);
        if (!out_path.empty()) {
            auto out = open_out(out_path);
            tempo::write_static_graph(out, r.graph);
        } else {
            tempo::write_static_graph(std::cout, r.graph);
        }
        if (!map_path.empty()) {
            auto out = open_out(map_path);
            tempo::write_flat_map(out, r.n, r.T);
        }
    } else {
        tempo::Col2Reduction r = tempo::to_col2(g);
        if (!out_path.empty()) {
            auto out = open_out(out_path);
            tempo::write_static_graph(out, r.graph);
        } else {
            tempo::write_static_graph(std::cout, r.graph);
        }
        if (!map_path.empty()) {
            auto out = open_out(map_path);
            for (std::size_t id = 0; id < r.nodes.size(); ++id)
                out << "m " << id << " " << r.nodes[id].first << " "
                    << r.nodes[id].second << "\n";
        }
    }
    return 0;
}

int cmd_grow_pace(const std::string& graph_path) {
    std::cout << tempo::grow_pace(load_graph(graph_path)) << "\n";
    return 0;
}

int cmd_gadget(const std::string& name, int param, const std::string& out_path,
               const std::string& names_path, const std::string& coloring_path) {
    tempo::GadgetInstance g = tempo::make_gadget(name, param);
    g.self_check();
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        tempo::write_temporal_graph(out, g.graph);
    } else {
        tempo::write_temporal_graph(std::cout, g.graph);
    }
    if (!names_path.empty()) {
        auto out = open_out(names_path);
        tempo::write_names(out, g.vertex_names);
    }
    if (!coloring_path.empty()) {
        if (g.fixed_colorings.empty())
            throw std::invalid_argument("gadget " + name + " ships no coloring");
        auto& [t, col] = g.fixed_colorings.begin()->second;
        tempo::ColoringSeq seq;
        seq.palette_size = 1 + *std::max_element(col.begin(), col.end());
        seq.per_time.assign(t, col);  // rows 1..t, the last one is the shipped slot
        auto out = open_out(coloring_path);
        tempo::write_coloring_seq(out, seq);
    }
    return 0;
}

int cmd_bound_report(const std::string& graph_path, long long budget, double time_budget) {
    tempo::TemporalGraph g = load_graph(graph_path);
    tempo::BoundReport r = tempo::bound_report(g, make_config(budget, time_budget));
    std::cout << "lower " << r.lower;
    for (auto& [name, ub] : r.uppers)
        std::cout << " " << name << " " << ub;
    std::cout << "\n";
    std::cout << "chi_s " << r.chi_s << "\nchi_3s " << r.chi_3s << "\n";
    return 0;
}

int cmd_enumerate(int n, int T, int delta, int colors, const std::string& cls,
                  int width, const std::string& out_dir,
                  const std::string& checkpoint, bool resume,
                  long long budget, double time_budget) {
    tempo::EnumerateOptions opt;
    opt.search = make_config(budget, time_budget);
    opt.parallel_width = width;
    std::set<std::string> done;
    if (resume && !checkpoint.empty()) {
        std::ifstream in(checkpoint);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty())
                done.insert(line);
        opt.skip_start = &done;
    }
    std::ofstream ck;
    if (!checkpoint.empty()) {
        ck.open(checkpoint, std::ios::app);
        if (!ck)
            throw std::invalid_argument("cannot open " + checkpoint);
        opt.on_start_done = [&](const std::string& sig) { ck << sig << "\n" << std::flush; };
    }
    tempo::EnumerationResult res = tempo::enumerate_growpace1(
        n, T, delta, colors, tempo::parse_snapshot_kind(cls), opt);
    if (!out_dir.empty()) {
        auto index = open_out(out_dir + "/index.txt");
        for (std::size_t i = 0; i < res.witnesses.size(); ++i) {
            std::string path = out_dir + "/witness_" + std::to_string(i) + ".tg";
            auto out = open_out(path);
            tempo::write_temporal_graph(out, res.witnesses[i]);
            index << path << " chi " << res.witness_chi[i] << " sig "
                  << res.signatures[i] << "\n";
        }
    }
    std::cout << "witnesses " << res.witnesses.size() << " labeled "
              << res.labeled_witnesses << " sequences " << res.labeled_sequences
              << " starts " << res.start_graphs << "\n";
    for (std::size_t i = 0; i < res.signatures.size(); ++i)
        std::cout << "sig " << res.signatures[i] << " chi " << res.witness_chi[i] << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"temporal graph coloring toolkit"};
    app.require_subcommand(1);

    std::string graph_path, coloring_path, names_path, out_path, map_path;
    std::string method, gadget_name, cls = "degree", out_dir, checkpoint;
    int delta = -1, param = 0, n = 0, T = 0, colors = 0, width = 1;
    long long budget = 0;
    double time_budget = 0;
    bool direct = false, to_static_flag = false, to_col2_flag = false, resume = false;

    auto* verify = app.add_subcommand("verify", "check a coloring sequence");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("coloring", coloring_path)->required();
    verify->add_option("--names", names_path);

    auto* color = app.add_subcommand("color", "run a constructive coloring");
    color->add_option("graph", graph_path)->required();
    color->add_option("--method", method)->required()
        ->check(CLI::IsMember({"cube", "double", "dup-square", "bounded",
                               "dup-bounded", "growpace1"}));
    color->add_option("--delta", delta);
    color->add_option("-o,--out", out_path);

    auto* chi = app.add_subcommand("chi", "exact temporal chromatic number");
    chi->add_option("graph", graph_path)->required();
    chi->add_option("--budget", budget);
    chi->add_option("--time-budget", time_budget);
    chi->add_flag("--direct", direct, "use the layered search instead of the reduction");

    auto* two = app.add_subcommand("two-colorable", "temporal 2-colorability");
    two->add_option("graph", graph_path)->required();
    two->add_option("-o,--out", out_path);

    auto* reduce = app.add_subcommand("reduce", "emit a static reduction");
    reduce->add_option("graph", graph_path)->required();
    reduce->add_flag("--static", to_static_flag);
    reduce->add_flag("--col2", to_col2_flag);
    reduce->add_option("-o,--out", out_path);
    reduce->add_option("--map", map_path);

    auto* pace = app.add_subcommand("grow-pace", "print the grow pace");
    pace->add_option("graph", graph_path)->required();

    auto* gadget = app.add_subcommand("gadget", "emit a named instance");
    gadget->add_option("name", gadget_name)->required();
    gadget->add_option("--d,--delta", param);
    gadget->add_option("-o,--out", out_path);
    gadget->add_option("--names", names_path);
    gadget->add_option("--coloring", coloring_path);

    auto* bounds = app.add_subcommand("bound-report", "chromatic bound sandwich");
    bounds->add_option("graph", graph_path)->required();
    bounds->add_option("--budget", budget);
    bounds->add_option("--time-budget", time_budget);

    auto* enumerate = app.add_subcommand("enumerate", "search grow-pace-1 instances");
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--T", T)->required();
    enumerate->add_option("--delta", delta);
    enumerate->add_option("--colors", colors)->required();
    enumerate->add_option("--class", cls)
        ->check(CLI::IsMember({"degree", "bipartite", "forest"}));
    enumerate->add_option("--width", width);
    enumerate->add_option("--out-dir", out_dir);
    enumerate->add_option("--checkpoint", checkpoint);
    enumerate->add_flag("--resume", resume);
    enumerate->add_option("--budget", budget);
    enumerate->add_option("--time-budget", time_budget);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return cmd_verify(graph_path, coloring_path, names_path);
        if (color->parsed())
            return cmd_color(graph_path, method, delta, out_path);
        if (chi->parsed())
            return cmd_chi(graph_path, budget, time_budget, direct);
        if (two->parsed())
            return cmd_two_colorable(graph_path, out_path);
        if (reduce->parsed())
            return cmd_reduce(graph_path, to_static_flag, to_col2_flag, out_path, map_path);
        if (pace->parsed())
            return cmd_grow_pace(graph_path);
        if (gadget->parsed())
            return cmd_gadget(gadget_name, param, out_path, names_path, coloring_path);
        if (bounds->parsed())
            return cmd_bound_report(graph_path, budget, time_budget);
        if (enumerate->parsed())
            return cmd_enumerate(n, T, delta, colors, cls, width, out_dir, checkpoint,
                                 resume, budget, time_budget);
    } catch (const tempo::resource_error& e) {
        std::cerr << "BUDGET " << e.lower << " " << e.upper << "\n" << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "ERROR " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "ERROR " << e.what() << "\n";
        return 2;
    }
    return 2;
}
