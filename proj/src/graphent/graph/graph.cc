#include "graphent/graph/graph.h"

#include <sstream>
#include <stdexcept>

namespace graphent {

VertexSet VertexSet::of(std::initializer_list<Vertex> vertices) {
    VertexSet s;
    for (Vertex v : vertices) {
        if (v < 0 || v >= kMaxVertices) {
            throw std::out_of_range("vertex index out of range");
        }
        s.insert(v);
    }
    return s;
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this) {
        out.push_back(v);
    }
    return out;
}

std::string VertexSet::to_string() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (Vertex v : *this) {
        if (!first) {
            out << ',';
        }
        out << v + 1;
        first = false;
    }
    out << '}';
    return out.str();
}

Graph::Graph(int n) {
    if (n < 0 || n > kMaxVertices) {
        throw std::invalid_argument("graph size must be in [0, 64], got " + std::to_string(n));
    }
    rows_.assign(n, 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [a, b] : edges) {
        g.add_edge(a, b);
    }
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

void Graph::check_pair(Vertex a, Vertex b) const {
    if (a < 0 || a >= num_vertices() || b < 0 || b >= num_vertices()) {
        throw std::out_of_range("vertex out of range");
    }
    if (a == b) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(a + 1));
    }
}

int Graph::num_edges() const {
    int twice = 0;
    for (uint64_t r : rows_) {
        twice += popcount(r);
    }
    return twice / 2;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    check_pair(a, b);
    return (rows_[a] >> b) & 1;
}

void Graph::add_edge(Vertex a, Vertex b) {
    check_pair(a, b);
    rows_[a] |= uint64_t{1} << b;
    rows_[b] |= uint64_t{1} << a;
}

void Graph::remove_edge(Vertex a, Vertex b) {
    check_pair(a, b);
    rows_[a] &= ~(uint64_t{1} << b);
    rows_[b] &= ~(uint64_t{1} << a);
}

void Graph::toggle_edge(Vertex a, Vertex b) {
    check_pair(a, b);
    rows_[a] ^= uint64_t{1} << b;
    rows_[b] ^= uint64_t{1} << a;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex a = 0; a < num_vertices(); a++) {
        for_each_bit(rows_[a] & ~low_mask(a + 1), [&](int b) { out.emplace_back(a, b); });
    }
    return out;
}

bool Graph::is_connected() const {
    int n = num_vertices();
    if (n == 0) {
        return true;
    }
    uint64_t seen = 1;
    uint64_t frontier = 1;
    while (frontier) {
        uint64_t next = 0;
        for_each_bit(frontier, [&](int v) { next |= rows_[v]; });
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == low_mask(n);
}

bool Graph::is_independent(VertexSet s) const {
    for (Vertex v : s) {
        if (rows_.at(v) & s.bits()) {
            return false;
        }
    }
    return true;
}

bool Graph::is_vertex_cover(VertexSet s) const {
    return is_independent(vertices() - s);
}

std::strong_ordering Graph::operator<=>(const Graph &o) const {
    if (auto c = num_vertices() <=> o.num_vertices(); c != 0) {
        return c;
    }
    for (std::size_t i = 0; i < rows_.size(); i++) {
        if (auto c = rows_[i] <=> o.rows_[i]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

Graph local_complement(const Graph &g, Vertex a) {
    if (a < 0 || a >= g.num_vertices()) {
        throw std::out_of_range("local complementation at vertex out of range");
    }
    Graph out = g;
    VertexSet nbhd = g.neighbors(a);
    for (Vertex b : nbhd) {
        for (Vertex c : nbhd) {
            if (b < c) {
                out.toggle_edge(b, c);
            }
        }
    }
    return out;
}

std::size_t GraphHash::operator()(const Graph &g) const {
    // FNV-1a over the adjacency words.
    uint64_t h = 1469598103934665603ull ^ static_cast<uint64_t>(g.num_vertices());
    for (uint64_t r : g.rows()) {
        h ^= r;
        h *= 1099511628211ull;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

Graph path_graph(int n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; v++) {
        g.add_edge(v, v + 1);
    }
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) {
        g.add_edge(n - 1, 0);
    }
    return g;
}

Graph star_graph(int n) {
    Graph g(n);
    for (Vertex v = 1; v < n; v++) {
        g.add_edge(0, v);
    }
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (Vertex a = 0; a < n; a++) {
        for (Vertex b = a + 1; b < n; b++) {
            g.add_edge(a, b);
        }
    }
    return g;
}

}  // namespace graphent
