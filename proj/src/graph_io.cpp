#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "skewrank/error.hpp"
#include "skewrank/graph.hpp"

namespace skewrank {

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto pos = text.find('\n');
        lines.push_back(text.substr(0, pos));
        if (pos == std::string_view::npos) break;
        text.remove_prefix(pos + 1);
    }
    return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_int(std::string_view s, long long& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

constexpr int kGraph6Offset = 63;

}  // namespace

Graph parse_edge_list(std::string_view text) {
    long long n = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    int line_no = 0;
    for (std::string_view raw : split_lines(text)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto toks = tokens(line);
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (n < 0) {
            if (toks.size() != 1 || !parse_int(toks[0], n) || n < 0)
                throw ParseError(ParseError::Kind::MalformedHeader,
                                 where + "expected vertex count, got '" + std::string(line) + "'");
            continue;
        }
        long long a = 0, b = 0;
        if (toks.size() != 2 || !parse_int(toks[0], a) || !parse_int(toks[1], b))
            throw ParseError(ParseError::Kind::MalformedLine,
                             where + "expected two integers, got '" + std::string(line) + "'");
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw ParseError(ParseError::Kind::VertexOutOfRange,
                             where + "vertex out of range in '" + std::string(line) + "' (n=" + std::to_string(n) + ")");
        if (a == b)
            throw ParseError(ParseError::Kind::Loop, where + "loop at vertex " + std::to_string(a) + " rejected");
        Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
        if (!seen.insert(e).second)
            throw ParseError(ParseError::Kind::DuplicateEdge, where + "duplicate edge " + std::to_string(e.u) + " " +
                                                                  std::to_string(e.v));
        edges.push_back(e);
    }
    if (n < 0) throw ParseError(ParseError::Kind::MalformedHeader, "missing vertex count");
    return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view text) {
    std::string_view s = trim(text);
    if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
    if (s.empty()) throw ParseError(ParseError::Kind::MalformedHeader, "empty graph6 string");
    for (char c : s)
        if (c < 63 || c > 126)
            throw ParseError(ParseError::Kind::BadGraph6, std::string("invalid graph6 byte '") + c + "'");
    long long n = 0;
    std::size_t pos = 0;
    if (s[0] != 126) {
        n = s[0] - kGraph6Offset;
        pos = 1;
    } else if (s.size() >= 4 && s[1] != 126) {
        n = ((s[1] - kGraph6Offset) << 12) | ((s[2] - kGraph6Offset) << 6) | (s[3] - kGraph6Offset);
        pos = 4;
    } else if (s.size() >= 8 && s[1] == 126) {
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | (s[i] - kGraph6Offset);
        pos = 8;
    } else {
        throw ParseError(ParseError::Kind::MalformedHeader, "truncated graph6 size header");
    }
    const long long bits = n * (n - 1) / 2;
    const long long bytes = (bits + 5) / 6;
    if (static_cast<long long>(s.size() - pos) != bytes)
        throw ParseError(ParseError::Kind::BadGraph6, "graph6 body has " + std::to_string(s.size() - pos) +
                                                          " bytes, expected " + std::to_string(bytes) + " for n=" +
                                                          std::to_string(n));
    std::vector<Edge> edges;
    long long k = 0;
    for (long long j = 1; j < n; ++j) {
        for (long long i = 0; i < j; ++i, ++k) {
            const int byte = s[pos + static_cast<std::size_t>(k / 6)] - kGraph6Offset;
            if (byte & (1 << (5 - k % 6))) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    // padding bits must be zero
    if (bits % 6 != 0) {
        const int last = s.back() - kGraph6Offset;
        if (last & ((1 << (6 - bits % 6)) - 1))
            throw ParseError(ParseError::Kind::BadGraph6, "nonzero graph6 padding bits");
    }
    return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
    std::string out;
    const long long n = g.order();
    if (n < 63) {
        out.push_back(static_cast<char>(n + kGraph6Offset));
    } else if (n < 258048) {
        out.push_back(126);
        for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Offset));
    } else {
        out += "~~";
        for (int shift : {30, 24, 18, 12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Offset));
    }
    const long long bits = n * (n - 1) / 2;
    std::vector<int> body(static_cast<std::size_t>((bits + 5) / 6), 0);
    for (const Edge& e : g.edges()) {
        const long long k = static_cast<long long>(e.v) * (e.v - 1) / 2 + e.u;
        body[static_cast<std::size_t>(k / 6)] |= 1 << (5 - k % 6);
    }
    for (int b : body) out.push_back(static_cast<char>(b + kGraph6Offset));
    return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::Graph6 ? to_graph6(g) + "\n" : to_edge_list(g);
}

GraphFormat guess_format(std::string_view text) {
    std::string_view s = trim(text);
    if (s.find_first_of(" \t\n") == std::string_view::npos) {
        long long ignored = 0;
        // a lone integer is an edge-less edge-list header
        if (!parse_int(s, ignored)) return GraphFormat::Graph6;
    }
    return GraphFormat::EdgeList;
}

}  // namespace skewrank
