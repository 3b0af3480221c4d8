// hued command-line front end. Talks to the library only through hued.h.
//
// Exit codes: 0 success, 1 verification failed / nothing found,
// 2 bad input, 3 internal error. Errors go to stderr as one JSON line.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hued/hued.h"

namespace {

enum Exit { kOk = 0, kInvalid = 1, kInput = 2, kInternal = 3 };

enum class LogLevel { Quiet, Info, Debug };

LogLevel log_level() {
    const char* env = std::getenv("HUED_LOG");
    if (env == nullptr) return LogLevel::Quiet;
    const std::string value = env;
    if (value == "debug") return LogLevel::Debug;
    if (value == "info") return LogLevel::Info;
    return LogLevel::Quiet;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

// Carries an exit code up to main together with its stderr line.
struct Failure {
    int code;
    std::string kind;
    std::string message;
    long long offset = -1;
};

[[noreturn]] void fail(int code, std::string kind, std::string message, long long offset = -1) {
    throw Failure{code, std::move(kind), std::move(message), offset};
}

void check(hued_status status) {
    if (status == HUED_OK) return;
    const int code = (status == HUED_ERR_INPUT || status == HUED_ERR_PARSE) ? kInput : kInternal;
    fail(code, hued_status_name(status), hued_last_error(),
         status == HUED_ERR_PARSE ? static_cast<long long>(hued_last_error_offset()) : -1);
}

struct GraphDeleter {
    void operator()(hued_graph* g) const { hued_graph_free(g); }
};
struct ColoringDeleter {
    void operator()(hued_coloring* c) const { hued_coloring_free(c); }
};
struct DesignDeleter {
    void operator()(hued_design* d) const { hued_design_free(d); }
};
struct StringDeleter {
    void operator()(char* s) const { hued_string_free(s); }
};
using GraphPtr = std::unique_ptr<hued_graph, GraphDeleter>;
using ColoringPtr = std::unique_ptr<hued_coloring, ColoringDeleter>;
using DesignPtr = std::unique_ptr<hued_design, DesignDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(kInput, "io", "cannot read '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << data)) fail(kInput, "io", "cannot write '" + path + "'");
}

std::string take(StringPtr s) {
    return s ? std::string(s.get()) : std::string();
}

hued_format resolve_format(const std::string& name, const std::string& path) {
    std::string chosen = name;
    if (chosen.empty()) {
        if (path.ends_with(".g6") || path.ends_with(".graph6")) {
            chosen = "graph6";
        } else if (path.ends_with(".dimacs") || path.ends_with(".col")) {
            chosen = "dimacs";
        } else {
            chosen = "edgelist";
        }
    }
    if (chosen == "graph6") return HUED_FORMAT_GRAPH6;
    if (chosen == "dimacs") return HUED_FORMAT_DIMACS;
    if (chosen == "edgelist") return HUED_FORMAT_EDGELIST;
    fail(kInput, "input", "unknown format '" + name + "'");
}

GraphPtr load_graph(const std::string& path, const std::string& format) {
    const std::string data = read_input(path);
    hued_graph* g = nullptr;
    check(hued_graph_parse(data.data(), data.size(), resolve_format(format, path), &g));
    return GraphPtr(g);
}

ColoringPtr load_coloring(const std::string& path) {
    const std::string data = read_input(path);
    hued_coloring* c = nullptr;
    check(hued_coloring_from_json(data.data(), data.size(), &c));
    return ColoringPtr(c);
}

void info(const std::string& line) {
    if (log_level() != LogLevel::Quiet) std::cerr << line << "\n";
}

// "10:120:10" -> 10,20,...,120; "5,7,9" -> as listed.
std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> out;
    try {
        if (text.find(':') != std::string::npos) {
            std::vector<std::size_t> parts;
            std::stringstream ss(text);
            for (std::string item; std::getline(ss, item, ':');) parts.push_back(std::stoul(item));
            if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument("range");
            const std::size_t step = parts.size() == 3 ? parts[2] : 1;
            if (step == 0) throw std::invalid_argument("step");
            for (std::size_t v = parts[0]; v <= parts[1]; v += step) out.push_back(v);
        } else {
            std::stringstream ss(text);
            for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stoul(item));
        }
    } catch (const std::exception&) {
        fail(kInput, "input", "cannot parse list '" + text + "'");
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    try {
        for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stod(item));
    } catch (const std::exception&) {
        fail(kInput, "input", "cannot parse list '" + text + "'");
    }
    return out;
}

std::vector<std::string> parse_string_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

template <typename T>
std::string json_array(const std::vector<T>& items) {
    std::ostringstream out;
    out.precision(17);
    out << "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out << ",";
        if constexpr (std::is_same_v<T, std::string>) {
            out << "\"" << json_escape(items[i]) << "\"";
        } else {
            out << items[i];
        }
    }
    out << "]";
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"r-hued graph colouring: greedy bound, exact search, designs and Levi graphs"};
    app.require_subcommand(1);

    std::string input;
    std::string format;
    std::string out;
    std::size_t r = 2;
    std::string order = "index";
    std::uint64_t seed = 0;
    std::uint32_t max_colors = 0;
    std::uint64_t timeout_ms = 0;

    auto* color = app.add_subcommand("color", "Greedy r-hued colouring");
    color->add_option("--input", input, "Graph file ('-' for stdin)")->required();
    color->add_option("--format", format, "graph6 | dimacs | edgelist (default: by extension)");
    color->add_option("--r", r, "Hue requirement r >= 1");
    color->add_option("--order", order, "Vertex order: index | random")->check(CLI::IsMember({"index", "random"}));
    color->add_option("--seed", seed, "Seed for --order random");
    color->add_option("--max-colors", max_colors, "Fail (exit 1) if more colours are used");
    color->add_option("--out", out, "Colouring JSON output (default stdout)");
    bool check_steps = false;
    color->add_flag("--check", check_steps, "Assert the step invariants while colouring");

    std::string coloring_path;
    auto* verify = app.add_subcommand("verify", "Check that a colouring is r-hued");
    verify->add_option("--input", input, "Graph file")->required();
    verify->add_option("--format", format, "Graph format");
    verify->add_option("--coloring", coloring_path, "Colouring JSON")->required();
    std::optional<std::size_t> verify_r;
    verify->add_option("--r", verify_r, "Hue requirement (default: r stored in the colouring)");

    auto* exact = app.add_subcommand("exact", "Exact r-hued chromatic number");
    exact->add_option("--input", input, "Graph file")->required();
    exact->add_option("--format", format, "Graph format");
    exact->add_option("--r", r, "Hue requirement r >= 1");
    exact->add_option("--timeout-ms", timeout_ms, "Search time limit (0 = none)");
    exact->add_option("--max-colors", max_colors, "Do not search beyond this many colours");
    std::size_t max_vertices = 40;
    exact->add_option("--max-vertices", max_vertices, "Refuse larger graphs");
    std::uint64_t node_limit = 0;
    exact->add_option("--node-limit", node_limit, "Search node limit (0 = none)");
    exact->add_option("--out", out, "Witness colouring JSON (default stdout)");

    std::string kind;
    std::uint32_t param = 0;
    auto* gen = app.add_subcommand("gen", "Generate a Steiner system S(2, r, n)");
    gen->add_option("--kind", kind, "pairs | bose | skolem | projective | affine | brute")
        ->required()
        ->check(CLI::IsMember({"pairs", "bose", "skolem", "projective", "affine", "brute"}));
    gen->add_option("--n", param, "Point count (pairs, bose, skolem, brute)");
    gen->add_option("--q", param, "Plane order (projective, affine)");
    std::uint32_t block_size = 3;
    gen->add_option("--block-size", block_size, "Block size for brute force");
    gen->add_option("--node-limit", node_limit, "Brute-force node limit");
    gen->add_option("--out", out, "Design JSON output (default stdout)");

    auto* levi = app.add_subcommand("levi", "Levi (incidence) graph of a design");
    levi->add_option("--input", input, "Design JSON")->required();
    levi->add_option("--format", format, "Output graph format (default: by extension)");
    levi->add_option("--out", out, "Graph output (default stdout)");

    std::size_t points = 0;
    std::string report_path;
    auto* reduce = app.add_subcommand("reduce", "Compress a Levi-graph colouring onto the point colours");
    reduce->add_option("--input", input, "Levi graph file (points first)")->required();
    reduce->add_option("--format", format, "Graph format");
    reduce->add_option("--points", points, "Number of point-side vertices")->required();
    reduce->add_option("--coloring", coloring_path, "Input colouring JSON")->required();
    reduce->add_option("--r", r, "Block size r")->required();
    reduce->add_option("--out", out, "Reduced colouring JSON (default stdout)");
    reduce->add_option("--report", report_path, "Step report JSON");

    std::string family = "gnp";
    std::string sizes_text;
    std::string probs_text;
    std::string rs_text;
    std::string designs_text;
    std::size_t trials = 1;
    std::size_t exact_cap = 12;
    std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
    bool no_timing = false;
    auto* bench = app.add_subcommand("bench", "Compare greedy colours with the bounds (CSV)");
    bench->add_option("--family", family, "gnp | levi")->check(CLI::IsMember({"gnp", "levi"}));
    bench->add_option("--n", sizes_text, "Sizes: list '10,20' or range '10:120:10'");
    bench->add_option("--p", probs_text, "Edge probabilities, comma separated");
    bench->add_option("--r", rs_text, "r values: list or range");
    bench->add_option("--designs", designs_text, "levi: e.g. pairs:5,skolem:13,projective:3");
    bench->add_option("--trials", trials, "Graphs per (n, p)");
    bench->add_option("--seed", seed, "Base seed");
    bench->add_option("--exact-max-vertices", exact_cap, "Run the exact solver up to this many vertices");
    timeout_ms = 2000;
    bench->add_option("--timeout-ms", timeout_ms, "Exact solver time limit per instance");
    bench->add_option("--jobs", jobs, "Worker threads");
    bench->add_flag("--no-timing", no_timing, "Leave the ms columns empty (reproducible bytes)");
    bench->add_option("--out", out, "CSV output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "{\"error\":\"usage\",\"message\":\"" << json_escape(e.what()) << "\"}\n";
        return kInput;
    }

    try {
        if (color->parsed()) {
            GraphPtr g = load_graph(input, format);
            hued_greedy_options options;
            hued_greedy_options_init(&options);
            options.r = static_cast<std::uint32_t>(r);
            options.order = order == "random" ? HUED_ORDER_RANDOM : HUED_ORDER_INDEX;
            options.seed = seed;
            if (check_steps) options.check_invariants = 1;
            options.record_log = log_level() == LogLevel::Debug ? 1 : 0;
            hued_coloring* c = nullptr;
            char* log = nullptr;
            check(hued_greedy(g.get(), &options, &c, &log));
            ColoringPtr coloring(c);
            const std::string log_text = take(StringPtr(log));
            if (log_level() == LogLevel::Debug) std::cerr << log_text;
            char* text = nullptr;
            check(hued_coloring_to_json(coloring.get(), &text));
            write_output(out, take(StringPtr(text)));
            const std::size_t used = hued_coloring_colors_used(coloring.get());
            info("{\"colors_used\":" + std::to_string(used) +
                 ",\"palette_size\":" + std::to_string(hued_coloring_palette_size(coloring.get())) + "}");
            if (max_colors != 0 && used > max_colors) {
                fail(kInvalid, "max_colors", std::to_string(used) + " colours used, limit " + std::to_string(max_colors));
            }
        } else if (verify->parsed()) {
            GraphPtr g = load_graph(input, format);
            ColoringPtr c = load_coloring(coloring_path);
            const auto hue = static_cast<std::uint32_t>(verify_r.value_or(hued_coloring_r(c.get())));
            int valid = 0;
            char* message = nullptr;
            check(hued_verify(g.get(), c.get(), hue, &valid, &message));
            const std::string why = take(StringPtr(message));
            if (!valid) fail(kInvalid, "invalid", why);
            std::cout << "{\"valid\":true,\"r\":" << hue << ",\"colors_used\":" << hued_coloring_colors_used(c.get())
                      << "}\n";
        } else if (exact->parsed()) {
            GraphPtr g = load_graph(input, format);
            hued_exact_options options;
            hued_exact_options_init(&options);
            options.max_vertices = max_vertices;
            options.node_limit = node_limit;
            options.timeout_ms = timeout_ms;
            options.max_colors = max_colors;
            hued_exact_info result{};
            hued_coloring* witness = nullptr;
            check(hued_exact(g.get(), static_cast<std::uint32_t>(r), &options, &result, &witness));
            ColoringPtr w(witness);
            std::cerr << "{\"chi_r\":" << result.chi_r << ",\"r\":" << r
                      << ",\"timed_out\":" << (result.timed_out ? "true" : "false")
                      << ",\"nodes\":" << result.nodes_explored << "}\n";
            if (result.exhausted_max_colors || !w) {
                fail(kInvalid, "not_found", "no r-hued colouring within " + std::to_string(max_colors) + " colours");
            }
            char* text = nullptr;
            check(hued_coloring_to_json(w.get(), &text));
            write_output(out, take(StringPtr(text)));
        } else if (gen->parsed()) {
            hued_design_kind which = HUED_DESIGN_PAIRS;
            if (kind == "bose") which = HUED_DESIGN_BOSE;
            if (kind == "skolem") which = HUED_DESIGN_SKOLEM;
            if (kind == "projective") which = HUED_DESIGN_PROJECTIVE;
            if (kind == "affine") which = HUED_DESIGN_AFFINE;
            if (kind == "brute") which = HUED_DESIGN_BRUTE;
            hued_design* d = nullptr;
            int indeterminate = 0;
            check(hued_design_generate(which, param, block_size, node_limit, &d, &indeterminate));
            DesignPtr design(d);
            if (!design) {
                fail(kInvalid, indeterminate ? "budget" : "not_found",
                     indeterminate ? "node budget exhausted before a decision" : "no such Steiner system exists");
            }
            char* text = nullptr;
            check(hued_design_to_json(design.get(), &text));
            write_output(out, take(StringPtr(text)));
        } else if (levi->parsed()) {
            const std::string data = read_input(input);
            hued_design* d = nullptr;
            check(hued_design_from_json(data.data(), data.size(), &d));
            DesignPtr design(d);
            hued_graph* g = nullptr;
            check(hued_levi_graph(design.get(), &g));
            GraphPtr graph(g);
            char* text = nullptr;
            check(hued_graph_write(graph.get(), resolve_format(format, out), &text));
            write_output(out, take(StringPtr(text)));
        } else if (reduce->parsed()) {
            GraphPtr g = load_graph(input, format);
            ColoringPtr c = load_coloring(coloring_path);
            hued_coloring* reduced = nullptr;
            int success = 0;
            char* report = nullptr;
            check(hued_reduce(g.get(), points, c.get(), static_cast<std::uint32_t>(r), &reduced, &success, &report));
            ColoringPtr result(reduced);
            const std::string report_text = take(StringPtr(report));
            if (!report_path.empty()) write_output(report_path, report_text);
            if (log_level() == LogLevel::Debug) std::cerr << report_text;
            char* text = nullptr;
            check(hued_coloring_to_json(result.get(), &text));
            write_output(out, take(StringPtr(text)));
            if (!success) fail(kInvalid, "best_effort", "recolouring stopped before reaching the point colours");
        } else if (bench->parsed()) {
            std::ostringstream config;
            config << "{\"family\":\"" << family << "\""
                   << ",\"sizes\":" << json_array(parse_size_list(sizes_text.empty() ? "50" : sizes_text))
                   << ",\"probabilities\":" << json_array(parse_double_list(probs_text.empty() ? "0.1" : probs_text))
                   << ",\"rs\":" << json_array(rs_text.empty() ? std::vector<std::size_t>{} : parse_size_list(rs_text))
                   << ",\"designs\":" << json_array(parse_string_list(designs_text)) << ",\"trials\":" << trials
                   << ",\"seed\":" << seed << ",\"exact_max_vertices\":" << exact_cap
                   << ",\"exact_timeout_ms\":" << timeout_ms << ",\"jobs\":" << jobs
                   << ",\"timing\":" << (no_timing ? "false" : "true") << "}";
            if (family == "gnp" && rs_text.empty()) fail(kInput, "input", "gnp benchmark needs --r");
            const std::string doc = config.str();
            char* csv = nullptr;
            int violation = 0;
            check(hued_bench(doc.data(), doc.size(), &csv, &violation));
            write_output(out, take(StringPtr(csv)));
            if (violation) fail(kInvalid, "bound_violation", "a row breaks greedy <= thm4_bound or exact <= greedy");
        }
    } catch (const Failure& f) {
        std::cerr << "{\"error\":\"" << json_escape(f.kind) << "\",\"message\":\"" << json_escape(f.message) << "\"";
        if (f.offset >= 0) std::cerr << ",\"offset\":" << f.offset;
        std::cerr << "}\n";
        return f.code;
    }
    return kOk;
}
