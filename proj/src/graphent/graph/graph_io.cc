#include "graphent/graph/graph_io.h"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace graphent {

namespace {

std::string_view strip(std::string_view s) {
    size_t hash = s.find('#');
    if (hash != std::string_view::npos) {
        s = s.substr(0, hash);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<long long> read_ints(std::string_view line, int line_no) {
    std::vector<long long> out;
    while (!line.empty()) {
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) {
            line.remove_prefix(1);
        }
        if (line.empty()) {
            break;
        }
        long long v = 0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
        if (ec != std::errc() ||
            (ptr != line.data() + line.size() && !std::isspace(static_cast<unsigned char>(*ptr)))) {
            throw GraphParseError("line " + std::to_string(line_no) + ": expected integers");
        }
        out.push_back(v);
        line.remove_prefix(ptr - line.data());
    }
    return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, std::string_view>> lines;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        line_no++;
        std::string_view line = strip(text.substr(pos, end - pos));
        if (!line.empty()) {
            lines.emplace_back(line_no, line);
        }
        pos = end + 1;
    }
    if (lines.empty()) {
        throw GraphParseError("empty input: expected header \"N M\"");
    }

    auto header = read_ints(lines[0].second, lines[0].first);
    if (header.size() != 2) {
        throw GraphParseError("line " + std::to_string(lines[0].first) + ": header must be \"N M\"");
    }
    long long n = header[0];
    long long m = header[1];
    if (n < 1) {
        throw GraphParseError("vertex count must be at least 1");
    }
    if (n > kMaxVertices) {
        throw GraphParseError("vertex count " + std::to_string(n) + " exceeds the limit of 64");
    }
    if (m < 0) {
        throw GraphParseError("negative edge count");
    }
    if (static_cast<long long>(lines.size()) - 1 != m) {
        throw GraphParseError("header declares " + std::to_string(m) + " edges but " +
                              std::to_string(lines.size() - 1) + " edge lines follow");
    }

    Graph g(static_cast<int>(n));
    for (size_t i = 1; i < lines.size(); i++) {
        auto [no, line] = lines[i];
        auto uv = read_ints(line, no);
        std::string where = "line " + std::to_string(no) + ": ";
        if (uv.size() != 2) {
            throw GraphParseError(where + "edge line must be \"u v\"");
        }
        for (long long v : uv) {
            if (v < 1 || v > n) {
                throw GraphParseError(where + "vertex " + std::to_string(v) + " out of range 1.." +
                                      std::to_string(n));
            }
        }
        int a = static_cast<int>(uv[0]) - 1;
        int b = static_cast<int>(uv[1]) - 1;
        if (a == b) {
            throw GraphParseError(where + "self-loop at vertex " + std::to_string(a + 1));
        }
        if (g.has_edge(a, b)) {
            throw GraphParseError(where + "duplicate edge " + std::to_string(a + 1) + " " +
                                  std::to_string(b + 1));
        }
        g.add_edge(a, b);
    }
    return g;
}

Graph parse_graph6(std::string_view text) {
    std::string_view s = strip(text);
    constexpr std::string_view header = ">>graph6<<";
    if (s.starts_with(header)) {
        s.remove_prefix(header.size());
    }
    if (s.empty()) {
        throw GraphParseError("empty graph6 string");
    }
    for (char c : s) {
        if (c < 63 || c > 126) {
            throw GraphParseError("graph6: invalid character");
        }
    }
    size_t n = 0;
    size_t at = 0;
    if (s[0] != 126) {
        n = s[0] - 63;
        at = 1;
    } else {
        if (s.size() < 4 || s[1] == 126) {
            throw GraphParseError("graph6: vertex count exceeds the limit of 64");
        }
        n = (size_t(s[1] - 63) << 12) | (size_t(s[2] - 63) << 6) | size_t(s[3] - 63);
        at = 4;
    }
    if (n < 1) {
        throw GraphParseError("vertex count must be at least 1");
    }
    if (n > kMaxVertices) {
        throw GraphParseError("vertex count " + std::to_string(n) + " exceeds the limit of 64");
    }
    size_t pairs = n * (n - 1) / 2;
    size_t need = (pairs + 5) / 6;
    if (s.size() - at != need) {
        throw GraphParseError("graph6: expected " + std::to_string(need) + " data bytes, got " +
                              std::to_string(s.size() - at));
    }
    Graph g(static_cast<int>(n));
    size_t k = 0;
    for (size_t b = 1; b < n; b++) {
        for (size_t a = 0; a < b; a++, k++) {
            int byte = s[at + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) {
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
            }
        }
    }
    // Padding bits must be zero.
    for (; k < need * 6; k++) {
        int byte = s[at + k / 6] - 63;
        if ((byte >> (5 - k % 6)) & 1) {
            throw GraphParseError("graph6: nonzero padding bits");
        }
    }
    return g;
}

Graph parse_graph(std::string_view text, GraphFormat format, bool require_connected) {
    Graph g = format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
    if (require_connected && !g.is_connected()) {
        throw GraphParseError("graph is disconnected; only connected graphs can be analysed");
    }
    return g;
}

GraphFormat parse_format_name(std::string_view name) {
    if (name == "edgelist" || name == "edge-list") {
        return GraphFormat::EdgeList;
    }
    if (name == "graph6") {
        return GraphFormat::Graph6;
    }
    throw GraphParseError("unknown graph format '" + std::string(name) + "'");
}

std::string write_edge_list(const Graph &g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.num_vertices() << ' ' << edges.size() << '\n';
    for (auto [a, b] : edges) {
        out << a + 1 << ' ' << b + 1 << '\n';
    }
    return out.str();
}

std::string write_graph6(const Graph &g) {
    size_t n = g.num_vertices();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0;
    int filled = 0;
    for (size_t b = 1; b < n; b++) {
        for (size_t a = 0; a < b; a++) {
            acc = (acc << 1) | (g.has_edge(static_cast<int>(a), static_cast<int>(b)) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) {
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    }
    return out;
}

}  // namespace graphent
