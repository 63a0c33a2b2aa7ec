#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "recolor/explore.hpp"

namespace recolor {

// DIMACS-style graph text: a "p edge <n> <m>" header, then m lines
// "e <u> <v>" with 1-indexed endpoints; lines starting with "c" are
// comments. Endpoints are stored 0-indexed. Duplicate edges are dropped with
// a warning; loops are a parse error.
Graph parse_graph(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::string serialize_graph(const Graph& g);

// JSON object {"k": <int>, "colors": [<int>...]} in vertex order.
Coloring parse_coloring(std::string_view text);
std::string serialize_coloring(const Coloring& c);

// JSON object {"steps": [{"v": <vertex>, "color": <int>}...]}.
RecoloringSequence parse_sequence(std::string_view text);
std::string serialize_sequence(const RecoloringSequence& s);

// DOT rendering of the configuration graph: one node per proper k-coloring
// labeled with its color vector, one edge per single-vertex recoloring;
// frozen nodes are filled.
std::string export_config_dot(const Graph& g, int k, const SearchLimits& limits = {});

}  // namespace recolor
