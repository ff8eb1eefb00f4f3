#include "rsat/constructions.hpp"
#include "rsat/io.hpp"
#include "rsat/oracle.hpp"
#include "rsat/parallel.hpp"
#include "rsat/patterns.hpp"
#include "rsat/saturation.hpp"
#include "rsat/search.hpp"

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using nlohmann::json;

// --pattern accepts a JSON file or a built-in name (k3, paw, wheel4, ...).
rsat::PatternGraph load_pattern(const std::string& spec)
{
    if (std::filesystem::exists(spec))
        return rsat::parse_pattern(rsat::read_file(spec));
    if (auto p = rsat::named_pattern(spec))
        return *p;
    std::string names;
    for (const auto& n : rsat::named_pattern_names())
        names += (names.empty() ? "" : ", ") + n;
    throw rsat::Error("no such pattern file or built-in pattern: " + spec + " (built-ins: " + names + ")");
}

rsat::ColouredGraph load_graph(const std::string& path)
{
    return rsat::parse_coloured(rsat::read_file(path));
}

rsat::VertexPair parse_edge_arg(const std::string& s)
{
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw rsat::Error("expected an edge as u,v: " + s);
    try {
        int u = std::stoi(s.substr(0, comma));
        int v = std::stoi(s.substr(comma + 1));
        return {u, v};
    }
    catch (const std::exception&) {
        throw rsat::Error("expected an edge as u,v: " + s);
    }
}

rsat::Palette palette_from(std::optional<int> t)
{
    return t ? rsat::Palette::bounded(*t) : rsat::Palette::unbounded();
}

void emit(const std::string& out_path, const std::string& content)
{
    if (out_path.empty())
        std::cout << content << "\n";
    else
        rsat::write_file(out_path, content);
}

json embedding_json(const rsat::Embedding& e)
{
    json j = json::object();
    for (size_t i = 0; i < e.map.size(); ++i)
        j[std::to_string(i)] = e.map[i];
    return j;
}

json report_json(const rsat::SaturationReport& r, const rsat::Palette& p)
{
    json j;
    j["has_rainbow"] = r.has_rainbow;
    j["rainbow_witness"] = r.rainbow_witness ? embedding_json(*r.rainbow_witness) : json(nullptr);
    j["bad_nonedges"] = json::array();
    for (const auto& b : r.bad_nonedges)
        j["bad_nonedges"].push_back({{"edge", {b.edge.first, b.edge.second}},
            {"bad_colours", b.bad.colours}, {"fresh_bad", b.bad.fresh_bad}});
    j["is_saturated"] = r.is_saturated;
    j["palette"] = p.is_bounded() ? json(*p.limit) : json("unbounded");
    j["palette_too_small"] = r.palette_too_small;
    return j;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"rainbow saturation toolkit: constructions, checkers, and an exact small-case oracle"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "cap the number of worker threads");

    std::string pattern_arg, graph_arg, inner_arg, out_arg, log_arg, edge_arg;
    std::optional<int> palette_t;
    int n_arg = 0, s_arg = 0, r_arg = 0;

    // gen
    auto* gen = app.add_subcommand("gen", "build a construction and write it as JSON");
    gen->require_subcommand(1);
    auto* gen31 = gen->add_subcommand("construction31", "shared-duplicate construction for a pattern edge in a triangle");
    gen31->add_option("--pattern", pattern_arg, "pattern file or built-in name")->required();
    gen31->add_option("--edge", edge_arg, "pattern edge u,v to contract")->required();
    gen31->add_option("--n", n_arg, "number of vertices")->required();
    gen31->add_option("-o,--out", out_arg, "output file (default stdout)");
    auto* genp = gen->add_subcommand("pendant", "disjoint rainbow cliques for patterns with a pendant vertex");
    genp->add_option("--pattern", pattern_arg)->required();
    genp->add_option("--n", n_arg)->required();
    genp->add_option("-o,--out", out_arg);
    auto* gend = gen->add_subcommand("disconnect", "assembly for a disconnected pattern around a saturated inner graph");
    gend->add_option("--pattern", pattern_arg)->required();
    gend->add_option("--inner", inner_arg, "inner coloured graph (JSON)")->required();
    gend->add_option("--n", n_arg, "expected total vertex count (checked)");
    gend->add_option("-o,--out", out_arg);
    auto* geng = gen->add_subcommand("clique-gadget", "complete gadget whose rainbow cliques stop at C(s,2)+1");
    geng->add_option("--s", s_arg)->required();
    geng->add_option("-o,--out", out_arg);
    auto* genc = gen->add_subcommand("clique", "host graph saturating K_{r+2}");
    genc->add_option("--r", r_arg)->required();
    genc->add_option("--n", n_arg)->required();
    genc->add_option("-o,--out", out_arg);

    // check
    auto* check = app.add_subcommand("check", "run a decision procedure; the exit code is the verdict");
    check->require_subcommand(1);
    auto* chr = check->add_subcommand("rainbow", "search for a rainbow copy of the pattern (exit 0 found, 1 none)");
    chr->add_option("--graph", graph_arg)->required();
    chr->add_option("--pattern", pattern_arg)->required();
    std::string require_edge_arg;
    std::optional<int> forbid_colour_arg;
    chr->add_option("--require-edge", require_edge_arg, "embedding must use this graph edge u,v");
    chr->add_option("--forbid-colour", forbid_colour_arg, "embedding may not use this colour");
    auto* chs = check->add_subcommand("saturation", "full saturation verdict (exit 0 saturated, 1 not)");
    chs->add_option("--graph", graph_arg)->required();
    chs->add_option("--pattern", pattern_arg)->required();
    chs->add_option("--palette", palette_t, "bounded palette size t (default: unbounded)");

    // absorb
    auto* ab = app.add_subcommand("absorb", "greedily add still-bad non-edges until the graph is saturated");
    ab->add_option("--graph", graph_arg)->required();
    ab->add_option("--pattern", pattern_arg)->required();
    ab->add_option("--palette", palette_t);
    ab->add_option("-o,--out", out_arg)->required();
    ab->add_option("--log", log_arg, "write the added (edge, colour) list as JSON");

    // exact
    auto* ex = app.add_subcommand("exact", "exhaustive minimum edge count of a saturated graph on n vertices");
    ex->add_option("--n", n_arg)->required();
    ex->add_option("--pattern", pattern_arg)->required();
    ex->add_option("--palette", palette_t);
    std::optional<int> max_edges_arg;
    ex->add_option("--max-edges", max_edges_arg, "give up above this edge count");
    bool force_large = false;
    ex->add_flag("--force", force_large, "lift the n <= 6 guard");
    ex->add_option("-o,--out", out_arg);

    // export
    auto* exp = app.add_subcommand("export", "convert a graph to another format");
    exp->require_subcommand(1);
    auto* expd = exp->add_subcommand("dot", "DOT with colour indices as edge labels");
    expd->add_option("--graph", graph_arg)->required();
    expd->add_option("-o,--out", out_arg);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        rsat::set_max_threads(threads);

        if (gen31->parsed()) {
            auto h = load_pattern(pattern_arg);
            auto [u, v] = parse_edge_arg(edge_arg);
            emit(out_arg, rsat::serialize(rsat::build_Gxy_n(h, u, v, n_arg)));
            return 0;
        }
        if (genp->parsed()) {
            emit(out_arg, rsat::serialize(rsat::build_pendant(load_pattern(pattern_arg), n_arg)));
            return 0;
        }
        if (gend->parsed()) {
            auto result = rsat::build_disconnect(load_pattern(pattern_arg), load_graph(inner_arg),
                gend->count("--n") ? std::optional<int>(n_arg) : std::nullopt);
            if (!result.inner_verified)
                std::cerr << "warning: inner graph too large to verify; trusting that it is saturated\n";
            emit(out_arg, rsat::serialize(result.graph));
            return 0;
        }
        if (geng->parsed()) {
            emit(out_arg, rsat::serialize(rsat::build_clique_gadget(s_arg).labelled()));
            return 0;
        }
        if (genc->parsed()) {
            emit(out_arg, rsat::serialize(rsat::build_clique_construction(r_arg, n_arg)));
            return 0;
        }
        if (chr->parsed()) {
            auto g = load_graph(graph_arg);
            auto h = load_pattern(pattern_arg);
            rsat::SearchConstraint c;
            if (!require_edge_arg.empty())
                c.required_edge = parse_edge_arg(require_edge_arg);
            c.forbidden_colour = forbid_colour_arg;
            auto found = rsat::find_rainbow_embedding(g, h, c);
            if (!found)
                return 1;
            emit(out_arg, embedding_json(*found).dump());
            return 0;
        }
        if (chs->parsed()) {
            auto palette = palette_from(palette_t);
            auto report = rsat::saturation_report(load_graph(graph_arg), load_pattern(pattern_arg), palette);
            emit(out_arg, report_json(report, palette).dump());
            return report.is_saturated ? 0 : 1;
        }
        if (ab->parsed()) {
            auto result = rsat::absorb(load_graph(graph_arg), load_pattern(pattern_arg), palette_from(palette_t));
            emit(out_arg, rsat::serialize(result.graph));
            if (!log_arg.empty()) {
                json added = json::array();
                for (const auto& [e, c] : result.added)
                    added.push_back({e.first, e.second, c});
                rsat::write_file(log_arg, added.dump());
            }
            return 0;
        }
        if (ex->parsed()) {
            rsat::OracleOptions opts;
            opts.edge_budget = max_edges_arg;
            opts.allow_large = force_large;
            auto palette = palette_from(palette_t);
            auto result = rsat::exact_rsat(n_arg, load_pattern(pattern_arg), palette, opts);
            json j;
            j["n"] = result.n;
            j["palette"] = palette.is_bounded() ? json(*palette.limit) : json("unbounded");
            j["min_edges"] = result.min_edges ? json(*result.min_edges) : json(nullptr);
            j["witness"] = result.witness ? json::parse(rsat::serialize(*result.witness)) : json(nullptr);
            j["stats"] = {{"graphs_examined", result.stats.graphs_examined},
                {"colourings_examined", result.stats.colourings_examined}};
            emit(out_arg, j.dump());
            return result.min_edges ? 0 : 1;
        }
        if (expd->parsed()) {
            emit(out_arg, rsat::to_dot(rsat::parse_labelled(rsat::read_file(graph_arg))));
            return 0;
        }
    }
    catch (const rsat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
