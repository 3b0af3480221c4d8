#pragma once

#include <string>
#include <string_view>

#include "hued/coloring.hpp"
#include "hued/designs.hpp"
#include "hued/exact.hpp"
#include "hued/greedy.hpp"
#include "hued/recolor.hpp"

// JSON documents exchanged by the CLI and the C API.
//
//   colouring: {"r": int, "palette_size": int, "colors": [int | null, ...]}
//   design:    {"n": int, "r": int, "blocks": [[int, ...], ...]}
//
// Vertex positions are 0-based, colours 1-based. Documents are written on a
// single line with a trailing newline so identical inputs give identical bytes.
namespace hued::interchange {

struct ColoringDocument {
    std::size_t r = 0;
    PartialColoring coloring{0, 1};
};

std::string coloring_to_json(const PartialColoring& phi, std::size_t r);
// Throws ParseError for malformed JSON or shape, InputError for colours
// outside the palette.
ColoringDocument coloring_from_json(std::string_view text);

// Writes the canonical form (blocks sorted, sorted lexicographically).
std::string design_to_json(const SteinerSystem& s);
SteinerSystem design_from_json(std::string_view text);

std::string recolor_report_to_json(const RecolorReport& report);
std::string greedy_log_to_json(const GreedyResult& result);
std::string exact_result_to_json(const ExactResult& result, std::size_t r);

} // namespace hued::interchange
