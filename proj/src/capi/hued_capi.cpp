#include "hued/hued.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include <json.hpp>

#include "hued/bench.hpp"
#include "hued/designs.hpp"
#include "hued/errors.hpp"
#include "hued/exact.hpp"
#include "hued/graph_io.hpp"
#include "hued/greedy.hpp"
#include "hued/interchange.hpp"
#include "hued/recolor.hpp"

struct hued_graph {
    hued::Graph graph;
};

struct hued_coloring {
    hued::PartialColoring coloring;
    std::size_t r;
};

struct hued_design {
    hued::SteinerSystem system;
};

namespace {

thread_local std::string last_error;
thread_local std::int64_t last_offset = -1;

void set_error(std::string message, std::int64_t offset = -1) {
    last_error = std::move(message);
    last_offset = offset;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
hued_status guarded(Body&& body) {
    try {
        set_error("");
        body();
        return HUED_OK;
    } catch (const hued::ParseError& e) {
        set_error(e.what(), static_cast<std::int64_t>(e.offset()));
        return HUED_ERR_PARSE;
    } catch (const hued::InputError& e) {
        set_error(e.what());
        return HUED_ERR_INPUT;
    } catch (const hued::InvariantError& e) {
        set_error(e.what());
        return HUED_ERR_INVARIANT;
    } catch (const std::exception& e) {
        set_error(e.what());
        return HUED_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return HUED_ERR_INTERNAL;
    }
}

void require(const void* ptr, const char* name) {
    if (ptr == nullptr) throw hued::InputError(std::string(name) + " must not be NULL");
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hued::GraphFormat to_format(hued_format format) {
    switch (format) {
    case HUED_FORMAT_GRAPH6: return hued::GraphFormat::Graph6;
    case HUED_FORMAT_DIMACS: return hued::GraphFormat::Dimacs;
    case HUED_FORMAT_EDGELIST: return hued::GraphFormat::EdgeList;
    }
    throw hued::InputError("unknown graph format");
}

} // namespace

extern "C" {

const char* hued_last_error(void) {
    return last_error.c_str();
}

int64_t hued_last_error_offset(void) {
    return last_offset;
}

const char* hued_status_name(hued_status status) {
    switch (status) {
    case HUED_OK: return "ok";
    case HUED_ERR_INPUT: return "input";
    case HUED_ERR_PARSE: return "parse";
    case HUED_ERR_INVARIANT: return "invariant";
    case HUED_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

void hued_string_free(char* s) {
    std::free(s);
}

hued_status hued_graph_parse(const char* data, size_t len, hued_format format, hued_graph** out) {
    return guarded([&] {
        require(out, "out");
        require(data, "data");
        *out = new hued_graph{hued::parse_graph(std::string_view(data, len), to_format(format))};
    });
}

hued_status hued_graph_write(const hued_graph* g, hued_format format, char** out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = copy_string(hued::write_graph(g->graph, to_format(format)));
    });
}

void hued_graph_free(hued_graph* g) {
    delete g;
}

size_t hued_graph_vertex_count(const hued_graph* g) {
    return g ? g->graph.vertex_count() : 0;
}

size_t hued_graph_edge_count(const hued_graph* g) {
    return g ? g->graph.edge_count() : 0;
}

size_t hued_graph_max_degree(const hued_graph* g) {
    return g ? g->graph.max_degree() : 0;
}

hued_status hued_graph_degree(const hued_graph* g, uint32_t v, size_t* out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = g->graph.degree(v);
    });
}

hued_status hued_graph_girth(const hued_graph* g, size_t* out, int* is_forest) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        require(is_forest, "is_forest");
        const auto value = hued::girth(g->graph);
        *is_forest = value ? 0 : 1;
        *out = value.value_or(0);
    });
}

hued_status hued_graph_bipartition(const hued_graph* g, int* is_bipartite, uint8_t* sides) {
    return guarded([&] {
        require(g, "graph");
        require(is_bipartite, "is_bipartite");
        const auto parts = hued::bipartition(g->graph);
        *is_bipartite = parts ? 1 : 0;
        if (parts && sides != nullptr) {
            for (auto v : parts->side0) sides[v] = 0;
            for (auto v : parts->side1) sides[v] = 1;
        }
    });
}

void hued_greedy_options_init(hued_greedy_options* options) {
    if (options == nullptr) return;
    options->r = 2;
    options->order = HUED_ORDER_INDEX;
    options->seed = 0;
    options->check_invariants = hued::kDebugChecks ? 1 : 0;
    options->record_log = 0;
}

hued_status hued_greedy(const hued_graph* g, const hued_greedy_options* options, hued_coloring** out,
                        char** log_json) {
    return guarded([&] {
        require(g, "graph");
        require(options, "options");
        require(out, "out");
        hued::GreedyOptions opts;
        opts.r = options->r;
        opts.order = options->order == HUED_ORDER_RANDOM ? hued::VertexOrder::Random : hued::VertexOrder::Index;
        opts.seed = options->seed;
        opts.check_invariants = options->check_invariants != 0;
        opts.record_log = options->record_log != 0;
        hued::GreedyResult result = hued::greedy_r_hued(g->graph, opts);
        char* log = log_json ? copy_string(hued::interchange::greedy_log_to_json(result)) : nullptr;
        *out = new hued_coloring{std::move(result.coloring), options->r};
        if (log_json) *log_json = log;
    });
}

hued_status hued_coloring_from_json(const char* text, size_t len, hued_coloring** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        auto doc = hued::interchange::coloring_from_json(std::string_view(text, len));
        *out = new hued_coloring{std::move(doc.coloring), doc.r};
    });
}

hued_status hued_coloring_to_json(const hued_coloring* c, char** out) {
    return guarded([&] {
        require(c, "coloring");
        require(out, "out");
        *out = copy_string(hued::interchange::coloring_to_json(c->coloring, c->r));
    });
}

void hued_coloring_free(hued_coloring* c) {
    delete c;
}

size_t hued_coloring_vertex_count(const hued_coloring* c) {
    return c ? c->coloring.vertex_count() : 0;
}

uint32_t hued_coloring_palette_size(const hued_coloring* c) {
    return c ? c->coloring.palette_size() : 0;
}

size_t hued_coloring_colors_used(const hued_coloring* c) {
    return c ? c->coloring.colors_used() : 0;
}

uint32_t hued_coloring_get(const hued_coloring* c, uint32_t v) {
    if (c == nullptr || v >= c->coloring.vertex_count()) return 0;
    return c->coloring.value(v);
}

uint32_t hued_coloring_r(const hued_coloring* c) {
    return c ? static_cast<uint32_t>(c->r) : 0;
}

hued_status hued_verify(const hued_graph* g, const hued_coloring* c, uint32_t r, int* valid, char** message) {
    return guarded([&] {
        require(g, "graph");
        require(c, "coloring");
        require(valid, "valid");
        if (c->coloring.vertex_count() != g->graph.vertex_count()) {
            throw hued::InputError("colouring has " + std::to_string(c->coloring.vertex_count()) +
                                   " entries but graph has " + std::to_string(g->graph.vertex_count()) + " vertices");
        }
        std::optional<std::string> why;
        if (!c->coloring.is_total()) {
            why = "colouring is partial";
        } else {
            why = hued::r_hued_violation(g->graph, c->coloring, r);
        }
        *valid = why ? 0 : 1;
        if (message) *message = why ? copy_string(*why) : nullptr;
    });
}

hued_status hued_verify_partial(const hued_graph* g, const hued_coloring* c, uint32_t r, int* valid) {
    return guarded([&] {
        require(g, "graph");
        require(c, "coloring");
        require(valid, "valid");
        *valid = hued::is_partial_r_hued(g->graph, c->coloring, r) ? 1 : 0;
    });
}

void hued_exact_options_init(hued_exact_options* options) {
    if (options == nullptr) return;
    options->max_vertices = hued::ExactBudget{}.max_vertices;
    options->node_limit = 0;
    options->timeout_ms = 0;
    options->max_colors = 0;
}

uint32_t hued_lower_bound(const hued_graph* g, uint32_t r) {
    return g ? hued::hued_lower_bound(g->graph, r) : 0;
}

hued_status hued_exact(const hued_graph* g, uint32_t r, const hued_exact_options* options, hued_exact_info* info,
                       hued_coloring** witness) {
    return guarded([&] {
        require(g, "graph");
        require(info, "info");
        hued::ExactBudget budget;
        if (options) {
            budget.max_vertices = options->max_vertices;
            budget.node_limit = options->node_limit;
            budget.timeout_ms = options->timeout_ms;
            if (options->max_colors != 0) budget.max_colors = options->max_colors;
        }
        hued::ExactResult result = hued::exact_chi_r(g->graph, r, budget);
        info->chi_r = result.chi_r;
        info->nodes_explored = result.nodes_explored;
        info->timed_out = result.timed_out ? 1 : 0;
        info->exhausted_max_colors = result.exhausted_max_colors ? 1 : 0;
        if (witness) {
            *witness = result.chi_r != 0 || g->graph.vertex_count() == 0
                           ? new hued_coloring{std::move(result.witness), r}
                           : nullptr;
        }
    });
}

hued_status hued_design_generate(hued_design_kind kind, uint32_t param, uint32_t block_size, uint64_t node_limit,
                                 hued_design** out, int* indeterminate) {
    return guarded([&] {
        require(out, "out");
        *out = nullptr;
        if (indeterminate) *indeterminate = 0;
        hued::SteinerSystem s;
        switch (kind) {
        case HUED_DESIGN_PAIRS: s = hued::pairs_system(param); break;
        case HUED_DESIGN_BOSE: s = hued::bose_triple_system(param); break;
        case HUED_DESIGN_SKOLEM: s = hued::skolem_triple_system(param); break;
        case HUED_DESIGN_PROJECTIVE: s = hued::projective_plane(param); break;
        case HUED_DESIGN_AFFINE: s = hued::affine_plane(param); break;
        case HUED_DESIGN_BRUTE: {
            auto found = hued::brute_force_steiner(param, block_size, node_limit == 0 ? 50'000'000 : node_limit);
            if (indeterminate) *indeterminate = found.budget_exceeded ? 1 : 0;
            if (!found.system) return;
            s = std::move(*found.system);
            break;
        }
        default: throw hued::InputError("unknown design kind");
        }
        *out = new hued_design{std::move(s)};
    });
}

hued_status hued_design_from_json(const char* text, size_t len, hued_design** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new hued_design{hued::interchange::design_from_json(std::string_view(text, len))};
    });
}

hued_status hued_design_to_json(const hued_design* d, char** out) {
    return guarded([&] {
        require(d, "design");
        require(out, "out");
        *out = copy_string(hued::interchange::design_to_json(d->system));
    });
}

void hued_design_free(hued_design* d) {
    delete d;
}

size_t hued_design_point_count(const hued_design* d) {
    return d ? d->system.n : 0;
}

size_t hued_design_block_size(const hued_design* d) {
    return d ? d->system.r : 0;
}

size_t hued_design_block_count(const hued_design* d) {
    return d ? d->system.blocks.size() : 0;
}

hued_status hued_design_verify(const hued_design* d, int* valid, char** message) {
    return guarded([&] {
        require(d, "design");
        require(valid, "valid");
        const auto report = hued::verify_steiner(d->system);
        *valid = report.ok ? 1 : 0;
        if (message) *message = report.ok ? nullptr : copy_string(report.failure);
    });
}

hued_status hued_levi_graph(const hued_design* d, hued_graph** out) {
    return guarded([&] {
        require(d, "design");
        require(out, "out");
        hued::SteinerSystem canonical = d->system;
        canonical.canonicalize();
        *out = new hued_graph{hued::levi_graph(canonical).graph};
    });
}

hued_status hued_reduce(const hued_graph* levi, size_t point_count, const hued_coloring* c, uint32_t r,
                        hued_coloring** out, int* success, char** report_json) {
    return guarded([&] {
        require(levi, "levi");
        require(c, "coloring");
        require(out, "out");
        const hued::LeviGraph lg = hued::levi_from_graph(levi->graph, point_count);
        hued::RecolorResult result = hued::reduce_levi_coloring(lg, c->coloring, r);
        char* report = report_json ? copy_string(hued::interchange::recolor_report_to_json(result.report)) : nullptr;
        if (success) *success = result.report.success ? 1 : 0;
        *out = new hued_coloring{std::move(result.coloring), r};
        if (report_json) *report_json = report;
    });
}

hued_status hued_bench(const char* config_json, size_t len, char** csv, int* violation) {
    return guarded([&] {
        require(config_json, "config_json");
        require(csv, "csv");
        using nlohmann::json;
        json doc;
        try {
            doc = json::parse(std::string_view(config_json, len));
        } catch (const json::parse_error& e) {
            throw hued::ParseError(std::string("invalid bench config: ") + e.what(), e.byte);
        }
        hued::BenchConfig config;
        bool timing = true;
        try {
            const std::string family = doc.value("family", std::string("gnp"));
            if (family == "gnp") {
                config.family = hued::BenchFamily::Gnp;
            } else if (family == "levi") {
                config.family = hued::BenchFamily::Levi;
            } else {
                throw hued::InputError("unknown bench family '" + family + "'");
            }
            config.sizes = doc.value("sizes", std::vector<std::size_t>{});
            config.probabilities = doc.value("probabilities", std::vector<double>{});
            config.trials = doc.value("trials", std::size_t{1});
            config.designs = doc.value("designs", std::vector<std::string>{});
            config.rs = doc.value("rs", std::vector<std::size_t>{});
            config.seed = doc.value("seed", std::uint64_t{0});
            config.exact_max_vertices = doc.value("exact_max_vertices", config.exact_max_vertices);
            config.exact_timeout_ms = doc.value("exact_timeout_ms", config.exact_timeout_ms);
            config.jobs = doc.value("jobs", std::size_t{1});
            timing = doc.value("timing", true);
        } catch (const json::exception& e) {
            throw hued::InputError(std::string("bad bench config: ") + e.what());
        }
        const auto records = hued::run_bench(config);
        if (violation) *violation = hued::bench_violation(records) ? 1 : 0;
        *csv = copy_string(hued::bench_csv(records, timing));
    });
}

} // extern "C"
