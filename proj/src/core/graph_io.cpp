#include "hued/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "hued/errors.hpp"

namespace hued {
namespace {

constexpr unsigned char kG6Bias = 63;
constexpr unsigned char kG6Max = 126;
constexpr std::string_view kG6Header = ">>graph6<<";

bool is_blank(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

// Splits input into lines while remembering where each starts.
struct Line {
    std::string_view text;
    std::size_t offset;
};

std::vector<Line> split_lines(std::string_view bytes) {
    std::vector<Line> lines;
    std::size_t start = 0;
    while (start < bytes.size()) {
        std::size_t end = bytes.find('\n', start);
        if (end == std::string_view::npos) end = bytes.size();
        std::string_view text = bytes.substr(start, end - start);
        if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
        lines.push_back({text, start});
        start = end + 1;
    }
    return lines;
}

struct Token {
    std::string_view text;
    std::size_t offset;
};

std::vector<Token> split_tokens(const Line& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.text.size()) {
        while (i < line.text.size() && is_blank(line.text[i])) ++i;
        const std::size_t begin = i;
        while (i < line.text.size() && !is_blank(line.text[i])) ++i;
        if (i > begin) tokens.push_back({line.text.substr(begin, i - begin), line.offset + begin});
    }
    return tokens;
}

std::uint64_t parse_count(const Token& token, const char* what) {
    std::uint64_t value = 0;
    const char* first = token.text.data();
    const char* last = first + token.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(std::string("expected ") + what + ", found '" + std::string(token.text) + "'",
                         token.offset);
    }
    return value;
}

// Collects edges, rejecting loops and repeats at the offending byte.
class EdgeCollector {
public:
    void add(std::uint64_t u, std::uint64_t v, std::size_t offset) {
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), offset);
        const std::uint64_t lo = std::min(u, v);
        const std::uint64_t hi = std::max(u, v);
        if (hi > UINT32_MAX) throw ParseError("vertex index too large", offset);
        if (!seen_.insert((lo << 32) | hi).second) {
            throw ParseError("duplicate edge (" + std::to_string(lo) + ", " + std::to_string(hi) + ")", offset);
        }
        edges_.emplace_back(static_cast<Vertex>(lo), static_cast<Vertex>(hi));
    }

    const std::vector<Edge>& edges() const { return edges_; }

private:
    std::unordered_set<std::uint64_t> seen_;
    std::vector<Edge> edges_;
};

Graph parse_graph6(std::string_view bytes) {
    std::size_t pos = 0;
    if (bytes.starts_with(kG6Header)) pos = kG6Header.size();

    std::size_t end = bytes.size();
    while (end > pos && is_blank(bytes[end - 1])) --end;

    auto take = [&](const char* what) -> std::uint64_t {
        if (pos >= end) throw ParseError(std::string("unexpected end of input in ") + what, pos);
        const auto c = static_cast<unsigned char>(bytes[pos]);
        if (c < kG6Bias || c > kG6Max) {
            throw ParseError(std::string("byte outside graph6 range in ") + what, pos);
        }
        ++pos;
        return c - kG6Bias;
    };

    std::uint64_t n = 0;
    if (pos < end && static_cast<unsigned char>(bytes[pos]) == kG6Max) {
        ++pos;
        int width = 3;
        if (pos < end && static_cast<unsigned char>(bytes[pos]) == kG6Max) {
            ++pos;
            width = 6;
        }
        for (int i = 0; i < width; ++i) n = (n << 6) | take("vertex count");
    } else {
        n = take("vertex count");
    }
    if (n > UINT32_MAX) throw ParseError("vertex count too large", 0);

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t body = (bits + 5) / 6;
    const std::size_t body_start = pos;
    if (end - pos != body) {
        throw ParseError("adjacency section has " + std::to_string(end - pos) + " bytes, expected " +
                             std::to_string(body),
                         end - pos < body ? end : body_start + body);
    }

    EdgeCollector edges;
    std::uint64_t bit = 0;
    std::uint64_t chunk = 0;
    for (std::uint32_t j = 1; j < n; ++j) {
        for (std::uint32_t i = 0; i < j; ++i, ++bit) {
            if (bit % 6 == 0) chunk = take("adjacency data");
            if (chunk & (std::uint64_t{1} << (5 - bit % 6))) edges.add(i, j, pos - 1);
        }
    }
    if (bit % 6 != 0) {
        const std::uint64_t padding_mask = (std::uint64_t{1} << (6 - bit % 6)) - 1;
        if (chunk & padding_mask) throw ParseError("nonzero padding bits in last adjacency byte", pos - 1);
    }
    return Graph::from_edges(static_cast<std::size_t>(n), edges.edges());
}

Graph parse_dimacs(std::string_view bytes) {
    std::optional<std::uint64_t> declared_n;
    std::uint64_t declared_m = 0;
    std::size_t header_offset = 0;
    EdgeCollector edges;
    for (const Line& line : split_lines(bytes)) {
        const auto tokens = split_tokens(line);
        if (tokens.empty() || tokens[0].text == "c") continue;
        const Token& kind = tokens[0];
        if (kind.text == "p") {
            if (declared_n) throw ParseError("second problem line", kind.offset);
            if (tokens.size() != 4 || (tokens[1].text != "edge" && tokens[1].text != "col")) {
                throw ParseError("malformed header, expected 'p edge <n> <m>'", kind.offset);
            }
            declared_n = parse_count(tokens[2], "vertex count");
            declared_m = parse_count(tokens[3], "edge count");
            header_offset = kind.offset;
        } else if (kind.text == "e") {
            if (!declared_n) throw ParseError("edge line before 'p edge' header", kind.offset);
            if (tokens.size() != 3) throw ParseError("malformed edge line, expected 'e <u> <v>'", kind.offset);
            const std::uint64_t u = parse_count(tokens[1], "vertex index");
            const std::uint64_t v = parse_count(tokens[2], "vertex index");
            for (const auto& [x, tok] : {std::pair{u, tokens[1]}, std::pair{v, tokens[2]}}) {
                if (x < 1 || x > *declared_n) {
                    throw ParseError("vertex index " + std::to_string(x) + " outside [1, " +
                                         std::to_string(*declared_n) + "]",
                                     tok.offset);
                }
            }
            edges.add(u - 1, v - 1, kind.offset);
        } else {
            throw ParseError("unknown line type '" + std::string(kind.text) + "'", kind.offset);
        }
    }
    if (!declared_n) throw ParseError("missing 'p edge' header", 0);
    if (edges.edges().size() != declared_m) {
        throw ParseError("header declares " + std::to_string(declared_m) + " edges, found " +
                             std::to_string(edges.edges().size()),
                         header_offset);
    }
    return Graph::from_edges(static_cast<std::size_t>(*declared_n), edges.edges());
}

Graph parse_edge_list(std::string_view bytes) {
    std::optional<std::uint64_t> declared_n;
    std::uint64_t implied_n = 0;
    EdgeCollector edges;
    for (const Line& line : split_lines(bytes)) {
        const auto tokens = split_tokens(line);
        if (tokens.empty()) continue;
        if (tokens[0].text.starts_with('#')) {
            if (tokens.size() == 3 && tokens[0].text == "#" && tokens[1].text == "vertices") {
                if (declared_n) throw ParseError("second vertex-count line", tokens[0].offset);
                if (!edges.edges().empty()) {
                    throw ParseError("vertex-count line must precede edges", tokens[0].offset);
                }
                declared_n = parse_count(tokens[2], "vertex count");
            }
            continue;
        }
        if (tokens.size() != 2) throw ParseError("expected two vertex indices per line", tokens[0].offset);
        const std::uint64_t u = parse_count(tokens[0], "vertex index");
        const std::uint64_t v = parse_count(tokens[1], "vertex index");
        if (declared_n) {
            for (const auto& [x, tok] : {std::pair{u, tokens[0]}, std::pair{v, tokens[1]}}) {
                if (x >= *declared_n) {
                    throw ParseError("vertex index " + std::to_string(x) + " outside [0, " +
                                         std::to_string(*declared_n) + ")",
                                     tok.offset);
                }
            }
        }
        edges.add(u, v, tokens[0].offset);
        implied_n = std::max({implied_n, u + 1, v + 1});
    }
    return Graph::from_edges(static_cast<std::size_t>(declared_n.value_or(implied_n)), edges.edges());
}

std::string write_graph6(const Graph& g) {
    const std::uint64_t n = g.vertex_count();
    std::string out;
    auto put6 = [&](std::uint64_t value) { out.push_back(static_cast<char>(value + kG6Bias)); };
    if (n <= 62) {
        put6(n);
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kG6Max));
        for (int shift = 12; shift >= 0; shift -= 6) put6((n >> shift) & 0x3f);
    } else {
        out.push_back(static_cast<char>(kG6Max));
        out.push_back(static_cast<char>(kG6Max));
        for (int shift = 30; shift >= 0; shift -= 6) put6((n >> shift) & 0x3f);
    }
    std::uint64_t chunk = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                put6(chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) put6(chunk << (6 - filled));
    out.push_back('\n');
    return out;
}

std::string write_dimacs(const Graph& g) {
    std::string out = "p edge " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges()) {
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    }
    return out;
}

std::string write_edge_list(const Graph& g) {
    std::string out = "# vertices " + std::to_string(g.vertex_count()) + "\n";
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

} // namespace

std::optional<GraphFormat> format_from_name(std::string_view name) {
    if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
    if (name == "dimacs") return GraphFormat::Dimacs;
    if (name == "edgelist") return GraphFormat::EdgeList;
    return std::nullopt;
}

std::string_view format_name(GraphFormat format) {
    switch (format) {
    case GraphFormat::Graph6: return "graph6";
    case GraphFormat::Dimacs: return "dimacs";
    case GraphFormat::EdgeList: return "edgelist";
    }
    return "edgelist";
}

GraphFormat format_from_path(std::string_view path) {
    if (path.ends_with(".g6") || path.ends_with(".graph6")) return GraphFormat::Graph6;
    if (path.ends_with(".dimacs") || path.ends_with(".col")) return GraphFormat::Dimacs;
    return GraphFormat::EdgeList;
}

Graph parse_graph(std::string_view bytes, GraphFormat format) {
    switch (format) {
    case GraphFormat::Graph6: return parse_graph6(bytes);
    case GraphFormat::Dimacs: return parse_dimacs(bytes);
    case GraphFormat::EdgeList: return parse_edge_list(bytes);
    }
    throw InputError("unknown graph format");
}

std::string write_graph(const Graph& g, GraphFormat format) {
    switch (format) {
    case GraphFormat::Graph6: return write_graph6(g);
    case GraphFormat::Dimacs: return write_dimacs(g);
    case GraphFormat::EdgeList: return write_edge_list(g);
    }
    throw InputError("unknown graph format");
}

} // namespace hued
