#include "graphent/measures/bell_extraction.h"

#include <algorithm>
#include <optional>
#include <unordered_map>

namespace graphent {

std::string BellMove::to_string() const {
    if (kind == Kind::ToggleEdge) {
        return "cz(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
    }
    return "lc(" + std::to_string(a + 1) + ")";
}

namespace {

struct Op {
    bool row;  // row addition inside A, else column addition inside B
    Vertex src;
    Vertex dst;
};

bool same_side(VertexSet side_a, Vertex u, Vertex v) { return side_a.contains(u) == side_a.contains(v); }

void clear_intra_edges(Graph &g, VertexSet side_a, std::vector<BellMove> &moves) {
    for (auto [u, v] : g.edges()) {
        if (same_side(side_a, u, v)) {
            g.toggle_edge(u, v);
            moves.push_back({BellMove::Kind::ToggleEdge, u, v});
        }
    }
}

std::string key_of(const std::vector<uint64_t> &rows) {
    return std::string(reinterpret_cast<const char *>(rows.data()), rows.size() * sizeof(uint64_t));
}

// Breadth-first search for a sequence of row/column additions turning the
// cross block into the matched pattern while keeping matched entries set.
std::optional<std::vector<Op>> search_ops(const Graph &g, const Matching &m, VertexSet side_a,
                                          const BellLimits &limits, std::string &why) {
    std::vector<Vertex> rows_of = side_a.to_vector();
    VertexSet side_b = g.vertices() - side_a;
    std::vector<Vertex> cols_of = side_b.to_vector();
    std::vector<uint64_t> must(rows_of.size(), 0);
    for (auto [u, v] : m.edges) {
        Vertex a = side_a.contains(u) ? u : v;
        Vertex b = a == u ? v : u;
        auto it = std::find(rows_of.begin(), rows_of.end(), a);
        must[it - rows_of.begin()] = uint64_t{1} << b;
    }
    std::vector<uint64_t> start(rows_of.size());
    for (std::size_t i = 0; i < rows_of.size(); i++) {
        start[i] = g.rows()[rows_of[i]] & side_b.bits();
    }
    if (start == must) {
        return std::vector<Op>{};
    }

    struct Node {
        std::vector<uint64_t> rows;
        int parent;
        Op op;
        int depth;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::string, int> seen;
    nodes.push_back({start, -1, {}, 0});
    seen.emplace(key_of(start), 0);
    int max_depth = limits.lc_per_vertex * g.num_vertices();

    auto keeps_matching = [&](const std::vector<uint64_t> &rows) {
        for (std::size_t i = 0; i < rows.size(); i++) {
            if ((rows[i] & must[i]) != must[i]) {
                return false;
            }
        }
        return true;
    };

    for (std::size_t head = 0; head < nodes.size(); head++) {
        if (nodes[head].depth >= max_depth) {
            continue;
        }
        auto expand = [&](std::vector<uint64_t> next, Op op) -> std::optional<std::vector<Op>> {
            if (!keeps_matching(next)) {
                return std::nullopt;
            }
            std::string key = key_of(next);
            if (seen.contains(key)) {
                return std::nullopt;
            }
            bool done = next == must;
            seen.emplace(std::move(key), static_cast<int>(nodes.size()));
            nodes.push_back({std::move(next), static_cast<int>(head), op, nodes[head].depth + 1});
            if (!done) {
                return std::nullopt;
            }
            std::vector<Op> ops;
            for (int at = static_cast<int>(nodes.size()) - 1; nodes[at].parent != -1; at = nodes[at].parent) {
                ops.push_back(nodes[at].op);
            }
            std::reverse(ops.begin(), ops.end());
            return ops;
        };
        for (std::size_t i = 0; i < rows_of.size(); i++) {
            for (std::size_t j = 0; j < rows_of.size(); j++) {
                if (i == j || nodes[head].rows[i] == 0) {
                    continue;
                }
                std::vector<uint64_t> next = nodes[head].rows;
                next[j] ^= next[i];
                if (auto found = expand(std::move(next), {true, rows_of[i], rows_of[j]})) {
                    return found;
                }
            }
        }
        for (Vertex u : cols_of) {
            for (Vertex w : cols_of) {
                if (u == w) {
                    continue;
                }
                std::vector<uint64_t> next = nodes[head].rows;
                bool any = false;
                for (auto &r : next) {
                    if ((r >> u) & 1) {
                        r ^= uint64_t{1} << w;
                        any = true;
                    }
                }
                if (!any) {
                    continue;
                }
                if (auto found = expand(std::move(next), {false, u, w})) {
                    return found;
                }
            }
        }
        if (nodes.size() > limits.max_states) {
            why = "state budget exhausted";
            return std::nullopt;
        }
    }
    why = "no move sequence within " + std::to_string(max_depth) + " local complementations";
    return std::nullopt;
}

int cut_rank_or_zero(const Graph &g, VertexSet side_a) {
    if (side_a.empty() || side_a == g.vertices()) {
        return 0;
    }
    return cut_rank(g, side_a);
}

std::string check_matching(const Graph &g, const Matching &m) {
    VertexSet used;
    for (auto [u, v] : m.edges) {
        if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices() || u == v || !g.has_edge(u, v)) {
            return "matching edge is not an edge of the graph";
        }
        if (used.contains(u) || used.contains(v)) {
            return "matching edges share a vertex";
        }
        used.insert(u);
        used.insert(v);
    }
    return "";
}

}  // namespace

std::string verify_bell_extraction(const Graph &g, const Matching &m, VertexSet side_a,
                                   const std::vector<BellMove> &moves) {
    for (auto [u, v] : m.edges) {
        if (same_side(side_a, u, v)) {
            return "matched edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) +
                   " does not cross the bipartition";
        }
    }
    Graph cur = g;
    for (std::size_t step = 0; step < moves.size(); step++) {
        const BellMove &mv = moves[step];
        if (mv.kind == BellMove::Kind::ToggleEdge) {
            if (!same_side(side_a, mv.a, mv.b)) {
                return "move " + mv.to_string() + " crosses the bipartition";
            }
            cur.toggle_edge(mv.a, mv.b);
        } else {
            cur = local_complement(cur, mv.a);
        }
        for (auto [u, v] : m.edges) {
            if (!cur.has_edge(u, v)) {
                return "matched edge removed by move " + std::to_string(step + 1) + " " + mv.to_string();
            }
        }
    }
    if (cur.num_edges() != m.size()) {
        return "final graph has " + std::to_string(cur.num_edges()) + " edges, expected " +
               std::to_string(m.size());
    }
    return "";
}

BellExtraction bell_extraction(const Graph &g, const Matching &m, const BellLimits &limits) {
    BellExtraction out;
    out.matching = m;
    out.final_graph = g;
    if (std::string bad = check_matching(g, m); !bad.empty()) {
        out.failure = bad;
        return out;
    }

    std::vector<VertexSet> sides;
    std::size_t choices = m.size() >= 20 ? limits.max_sides : std::min<std::size_t>(std::size_t{1} << m.size(), limits.max_sides);
    for (std::size_t mask = 0; mask < choices; mask++) {
        VertexSet a;
        for (int j = 0; j < m.size(); j++) {
            a.insert((mask >> j) & 1 ? m.edges[j].second : m.edges[j].first);
        }
        sides.push_back(a);
    }
    std::sort(sides.begin(), sides.end(), [](VertexSet x, VertexSet y) { return x.bits() < y.bits(); });

    std::string last = "no endpoint choice tried";
    for (VertexSet side_a : sides) {
        if (cut_rank_or_zero(g, side_a) != m.size()) {
            last = "cut rank across A=" + side_a.to_string() + " differs from |m|";
            continue;
        }
        std::string why;
        auto ops = search_ops(g, m, side_a, limits, why);
        if (!ops) {
            last = why + " for A=" + side_a.to_string();
            continue;
        }
        Graph cur = g;
        std::vector<BellMove> moves;
        clear_intra_edges(cur, side_a, moves);
        for (const Op &op : *ops) {
            cur.toggle_edge(op.src, op.dst);
            moves.push_back({BellMove::Kind::ToggleEdge, std::min(op.src, op.dst), std::max(op.src, op.dst)});
            cur = local_complement(cur, op.src);
            moves.push_back({BellMove::Kind::LocalComplement, op.src});
            clear_intra_edges(cur, side_a, moves);
        }
        std::string verdict = verify_bell_extraction(g, m, side_a, moves);
        if (!verdict.empty()) {
            last = "postcondition failed for A=" + side_a.to_string() + ": " + verdict;
            continue;
        }
        out.success = true;
        out.failure.clear();
        out.side_a = side_a;
        out.moves = std::move(moves);
        out.final_graph = cur;
        return out;
    }
    out.failure = last;
    return out;
}

BellExtraction bell_extraction_any(const Graph &g, std::size_t max_matchings_tried, const BellLimits &limits) {
    BellExtraction last;
    last.final_graph = g;
    last.failure = "graph has no maximum matching to try";
    for (const Matching &m : max_matchings(g, max_matchings_tried)) {
        last = bell_extraction(g, m, limits);
        if (last.success) {
            return last;
        }
    }
    return last;
}

}  // namespace graphent
