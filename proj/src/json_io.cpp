#include "bh/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace bh {

Json graph_to_json(const GradedGraph& g) {
    Json j;
    j["name"] = g.name();
    j["branching"] = g.is_branching();
    Json levels = Json::array();
    for (int level = 0; level <= g.max_level(); ++level) {
        Json row = Json::array();
        for (int i = 0; i < g.level_size(level); ++i) row.push_back(g.label({level, i}));
        levels.push_back(std::move(row));
    }
    j["levels"] = std::move(levels);
    Json edges = Json::array();
    for (int level = 0; level < g.max_level(); ++level)
        for (int i = 0; i < g.level_size(level); ++i)
            for (const Edge& e : g.out_edges({level, i})) {
                Json edge;
                edge["from"] = g.label({level, i});
                edge["to"] = g.label({level + 1, e.target_index});
                edge["kappa"] = e.kappa.to_string();
                edges.push_back(std::move(edge));
            }
    j["edges"] = std::move(edges);
    return j;
}

GraphPtr graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("name") || !j.contains("levels") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON must have name, levels and edges");
    GraphBuilder b(j.at("name").get<std::string>(), j.value("branching", false));
    for (const auto& row : j.at("levels")) {
        std::vector<std::string> labels;
        for (const auto& lab : row) labels.push_back(lab.get<std::string>());
        b.add_level(std::move(labels));
    }
    for (const auto& edge : j.at("edges")) {
        auto kappa_str = edge.at("kappa").get<std::string>();
        auto kappa = Rational::parse(kappa_str);
        if (!kappa)
            throw std::invalid_argument("bad kappa value '" + kappa_str + "'");
        b.add_edge(edge.at("from").get<std::string>(), edge.at("to").get<std::string>(), *kappa);
    }
    GraphPtr g = b.build();
    ValidationReport report = g->validate();
    if (!report.ok()) {
        std::string msg = "invalid graded graph:";
        for (const auto& p : report.problems) msg += "\n  " + p.what;
        throw std::invalid_argument(msg);
    }
    return g;
}

GraphPtr load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
    Json j;
    in >> j;
    return graph_from_json(j);
}

void save_graph_file(const GradedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file '" + path + "'");
    out << graph_to_json(g).dump(2) << "\n";
}

Json vertex_set_to_json(const VertexSet& s) {
    Json j;
    j["graph"] = s.graph()->name();
    j["kind"] = set_kind_name(s.kind());
    Json members = Json::array();
    for (VertexId v : s.members()) members.push_back(s.graph()->label(v));
    j["members"] = std::move(members);
    return j;
}

VertexSet vertex_set_from_json(const Json& j, GraphPtr graph) {
    if (j.value("graph", graph->name()) != graph->name())
        throw std::invalid_argument("vertex set belongs to graph '" +
                                    j.at("graph").get<std::string>() + "', not '" +
                                    graph->name() + "'");
    std::string kind_str = j.at("kind").get<std::string>();
    SetKind kind;
    if (kind_str == "ideal")
        kind = SetKind::ideal;
    else if (kind_str == "coideal")
        kind = SetKind::coideal;
    else if (kind_str == "plain")
        kind = SetKind::plain;
    else
        throw std::invalid_argument("unknown set kind '" + kind_str + "'");
    std::vector<VertexId> members;
    for (const auto& lab : j.at("members"))
        members.push_back(graph->vertex(lab.get<std::string>()));
    int horizon = graph->max_level();
    return VertexSet::from_members(std::move(graph), kind, members, horizon);
}

}  // namespace bh
