#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hued/graph.hpp"

namespace hued {

enum class GraphFormat {
    Graph6,   // McKay's graph6, optional ">>graph6<<" header, all size forms.
    Dimacs,   // "p edge n m" then "e u v" lines, 1-based.
    EdgeList, // "u v" per line, 0-based; optional "# vertices N" line.
};

std::optional<GraphFormat> format_from_name(std::string_view name);
std::string_view format_name(GraphFormat format);

// Guess from a file extension (.g6, .dimacs/.col, anything else edge list).
GraphFormat format_from_path(std::string_view path);

// Throws ParseError (with byte offset) on malformed input, including
// self-loops and duplicate edges.
Graph parse_graph(std::string_view bytes, GraphFormat format);

// Canonical text: edges in lexicographic order, newline terminated.
std::string write_graph(const Graph& g, GraphFormat format);

} // namespace hued
