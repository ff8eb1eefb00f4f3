#include "rsat/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rsat {

namespace {

using nlohmann::json;

json parse_json(const std::string& text)
{
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw Error("malformed JSON");
    if (!j.is_object())
        throw Error("expected a JSON object");
    return j;
}

int get_n(const json& j)
{
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw Error("missing or non-integer \"n\"");
    return j["n"].get<int>();
}

const json& get_edges(const json& j)
{
    static const json empty = json::array();
    if (!j.contains("edges"))
        return empty;
    if (!j["edges"].is_array())
        throw Error("\"edges\" must be an array");
    return j["edges"];
}

} // namespace

PatternGraph parse_pattern(const std::string& text)
{
    json j = parse_json(text);
    int n = get_n(j);
    std::vector<VertexPair> edges;
    for (const auto& e : get_edges(j)) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw Error("pattern edge must be [u, v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return PatternGraph(n, std::move(edges));
}

ColouredGraph parse_coloured(const std::string& text)
{
    json j = parse_json(text);
    int n = get_n(j);
    std::vector<ColouredEdge> edges;
    for (const auto& e : get_edges(j)) {
        if (!e.is_array() || e.size() != 3)
            throw Error("coloured edge must be [u, v, colour]; a colour is required on every edge");
        if (!e[0].is_number_integer() || !e[1].is_number_integer() || !e[2].is_number_integer())
            throw Error("coloured edge entries must be integers");
        edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<Colour>()});
    }
    return ColouredGraph(n, std::move(edges));
}

LabelledColouredGraph parse_labelled(const std::string& text)
{
    LabelledColouredGraph out;
    out.graph = parse_coloured(text);
    json j = parse_json(text);
    if (!j.contains("labels"))
        return out;
    try {
        const json& labels = j["labels"];
        if (!labels.is_object())
            throw Error("\"labels\" must be an object");
        if (labels.contains("vertices")) {
            const json& vs = labels["vertices"];
            if (!vs.is_array() || static_cast<int>(vs.size()) != out.graph.vertex_count())
                throw Error("labels.vertices must list every vertex");
            for (const auto& v : vs) {
                VertexLabel l;
                l.role = v.value("role", std::string{});
                l.copy = v.value("copy", -1);
                out.vertex_labels.push_back(std::move(l));
            }
        }
        if (labels.contains("edges")) {
            for (const auto& e : labels["edges"]) {
                if (!e.is_array() || e.size() != 4)
                    throw Error("labels.edges entries must be [u, v, a, b]");
                VertexPair ge = ordered(e[0].get<int>(), e[1].get<int>());
                if (!out.graph.has_edge(ge.first, ge.second))
                    throw Error("edge label on a non-edge");
                out.edge_labels.emplace_back(ge, ordered(e[2].get<int>(), e[3].get<int>()));
            }
            std::sort(out.edge_labels.begin(), out.edge_labels.end());
        }
    }
    catch (const json::exception& e) {
        throw Error(std::string("malformed labels block: ") + e.what());
    }
    return out;
}

std::string serialize(const PatternGraph& g)
{
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges())
        j["edges"].push_back({u, v});
    return j.dump();
}

namespace {

json coloured_to_json(const ColouredGraph& g)
{
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = json::array();
    for (const auto& e : g.edges())
        j["edges"].push_back({e.u, e.v, e.colour});
    return j;
}

} // namespace

std::string serialize(const ColouredGraph& g)
{
    return coloured_to_json(g).dump();
}

std::string serialize(const LabelledColouredGraph& g)
{
    json j = coloured_to_json(g.graph);
    if (!g.vertex_labels.empty() || !g.edge_labels.empty()) {
        json labels = json::object();
        if (!g.vertex_labels.empty()) {
            labels["vertices"] = json::array();
            for (const auto& l : g.vertex_labels)
                labels["vertices"].push_back({{"role", l.role}, {"copy", l.copy}});
        }
        if (!g.edge_labels.empty()) {
            labels["edges"] = json::array();
            for (const auto& [ge, le] : g.edge_labels)
                labels["edges"].push_back({ge.first, ge.second, le.first, le.second});
        }
        j["labels"] = std::move(labels);
    }
    return j.dump();
}

std::string to_dot(const LabelledColouredGraph& g)
{
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.graph.vertex_count(); ++v) {
        os << "  " << v;
        if (v < static_cast<int>(g.vertex_labels.size())) {
            const auto& l = g.vertex_labels[v];
            os << " [label=\"" << v << ":" << l.role;
            if (l.copy >= 0)
                os << "/" << l.copy;
            os << "\"]";
        }
        os << ";\n";
    }
    for (const auto& e : g.graph.edges())
        os << "  " << e.u << " -- " << e.v << " [label=\"" << e.colour << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write file: " + path);
    out << content;
}

} // namespace rsat
