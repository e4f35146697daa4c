#pragma once

#include <optional>
#include <string>

#include "thetadiv/graph.hpp"
#include "thetadiv/orientation.hpp"

namespace thetadiv {

struct ParsedInput {
    DualGraph graph;
    std::optional<Multidegree> multidegree;
};

// Graph document: a JSON object with "vertices" (list of {"id", "weight"}),
// "edges" (list of [id, id]) and an optional "multidegree" {"values":
// {id: int}}. parse(serialize(g)) reproduces the graph exactly.
ParsedInput parse_input(const std::string& text);
ParsedInput parse_input_file(const std::string& path);

std::string serialize_graph(const DualGraph& g, const Multidegree* d = nullptr);
std::string serialize_multidegree(const DualGraph& g, const Multidegree& d);
Multidegree parse_multidegree_document(const DualGraph& g, const std::string& text);

// Comma-separated integers in vertex insertion order, e.g. "-1,2".
Multidegree parse_multidegree_literal(const DualGraph& g, const std::string& literal);
std::string multidegree_literal(const Multidegree& d);

// Per-edge tokens "ab"/"ba" in edge order; loops serialize as "loop".
Orientation parse_orientation_tokens(const DualGraph& g, const std::string& csv);
std::string orientation_tokens(const DualGraph& g, const Orientation& o);

}  // namespace thetadiv
