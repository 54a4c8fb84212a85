#pragma once

#include "bh/graph.hpp"
#include "bh/ideals.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>

namespace bh {

using Json = nlohmann::ordered_json;

Json graph_to_json(const GradedGraph& g);
/// Parses and validates; throws std::invalid_argument with the full list of
/// violations if the graph breaks the graded-graph axioms.
GraphPtr graph_from_json(const Json& j);

GraphPtr load_graph_file(const std::string& path);
void save_graph_file(const GradedGraph& g, const std::string& path);

Json vertex_set_to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const Json& j, GraphPtr graph);

}  // namespace bh
