#include "hued/interchange.hpp"

#include <json.hpp>

#include "hued/errors.hpp"

namespace hued::interchange {
namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

template <typename T>
T require(const json& doc, const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end()) throw ParseError(std::string("missing key '") + key + "'", 0);
    try {
        return it->get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad value for '") + key + "': " + e.what(), 0);
    }
}

std::string dump(const json& doc) {
    return doc.dump() + "\n";
}

} // namespace

std::string coloring_to_json(const PartialColoring& phi, std::size_t r) {
    json colors = json::array();
    for (Color c : phi.values()) {
        if (c == 0) {
            colors.push_back(nullptr);
        } else {
            colors.push_back(c);
        }
    }
    json doc;
    doc["r"] = r;
    doc["palette_size"] = phi.palette_size();
    doc["colors"] = std::move(colors);
    return dump(doc);
}

ColoringDocument coloring_from_json(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("colouring document must be a JSON object", 0);
    ColoringDocument out;
    out.r = require<std::size_t>(doc, "r");
    const auto palette = require<std::int64_t>(doc, "palette_size");
    if (palette < 1 || palette > UINT32_MAX) throw InputError("palette_size must be a positive integer");
    const auto colors = doc.find("colors");
    if (colors == doc.end() || !colors->is_array()) throw ParseError("'colors' must be an array", 0);
    std::vector<Color> values;
    values.reserve(colors->size());
    for (std::size_t v = 0; v < colors->size(); ++v) {
        const json& entry = (*colors)[v];
        if (entry.is_null()) {
            values.push_back(0);
        } else if (entry.is_number_integer() && entry.get<std::int64_t>() >= 1 &&
                   entry.get<std::int64_t>() <= palette) {
            values.push_back(entry.get<Color>());
        } else {
            throw InputError("colors[" + std::to_string(v) + "] must be null or an integer in [1, palette_size]");
        }
    }
    out.coloring = PartialColoring::from_values(values, static_cast<Color>(palette));
    return out;
}

std::string design_to_json(const SteinerSystem& s) {
    SteinerSystem canonical = s;
    canonical.canonicalize();
    json doc;
    doc["n"] = canonical.n;
    doc["r"] = canonical.r;
    doc["blocks"] = canonical.blocks;
    return dump(doc);
}

SteinerSystem design_from_json(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("design document must be a JSON object", 0);
    SteinerSystem s;
    s.n = require<std::size_t>(doc, "n");
    s.r = require<std::size_t>(doc, "r");
    s.blocks = require<std::vector<Block>>(doc, "blocks");
    return s;
}

std::string recolor_report_to_json(const RecolorReport& report) {
    json steps = json::array();
    for (const auto& step : report.steps) {
        steps.push_back({{"block_vertex", step.block_vertex},
                         {"case", step.case_tag},
                         {"old_color", step.old_color},
                         {"new_color", step.new_color},
                         {"forbidden", step.forbidden},
                         {"offending_after", step.offending_after}});
    }
    json doc;
    doc["input_colors"] = report.input_colors;
    doc["output_colors"] = report.output_colors;
    doc["guaranteed"] = report.guaranteed;
    doc["success"] = report.success;
    if (!report.success) doc["failure"] = report.failure;
    doc["steps"] = std::move(steps);
    return dump(doc);
}

std::string greedy_log_to_json(const GreedyResult& result) {
    json steps = json::array();
    for (const auto& step : result.log) {
        json entry = {{"vertex", step.vertex},
                      {"case", static_cast<int>(step.step_case)},
                      {"forbidden", step.forbidden}};
        if (step.step_case == StepCase::ManyWeak) {
            json weak = json::array();
            for (const auto& [w, size] : step.weak_recolored) weak.push_back({w, size});
            entry["weak"] = std::move(weak);
        }
        steps.push_back(std::move(entry));
    }
    json doc;
    doc["effective_r"] = result.effective_r;
    doc["bound"] = result.bound;
    doc["colors_used"] = result.coloring.colors_used();
    doc["steps"] = std::move(steps);
    return dump(doc);
}

std::string exact_result_to_json(const ExactResult& result, std::size_t r) {
    json doc;
    doc["r"] = r;
    doc["chi_r"] = result.chi_r;
    doc["timed_out"] = result.timed_out;
    doc["exhausted_max_colors"] = result.exhausted_max_colors;
    doc["nodes_explored"] = result.nodes_explored;
    return dump(doc);
}

} // namespace hued::interchange
