#ifndef GRAPHENT_GRAPH_GRAPH_H
#define GRAPHENT_GRAPH_GRAPH_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphent/util/bits.h"

namespace graphent {

/// Vertex index. Zero-based inside the library; every text format and report
/// prints vertices one-based, matching the usual graph-state numbering.
using Vertex = int;

using Edge = std::pair<Vertex, Vertex>;

constexpr int kMaxVertices = 64;

/// A subset of the vertex set, stored as a 64-bit word.
class VertexSet {
   public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(uint64_t bits) : bits_(bits) {}

    static VertexSet of(std::initializer_list<Vertex> vertices);
    static VertexSet all(int n) { return VertexSet(low_mask(n)); }

    uint64_t bits() const { return bits_; }
    bool contains(Vertex v) const { return (bits_ >> v) & 1; }
    void insert(Vertex v) { bits_ |= uint64_t{1} << v; }
    void erase(Vertex v) { bits_ &= ~(uint64_t{1} << v); }
    int size() const { return popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    /// Members in increasing order.
    std::vector<Vertex> to_vector() const;

    /// "{1,3,5}" with one-based labels.
    std::string to_string() const;

    VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
    VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    bool operator==(const VertexSet &) const = default;

    class iterator {
       public:
        explicit iterator(uint64_t rest) : rest_(rest) {}
        Vertex operator*() const { return lowest_bit(rest_); }
        iterator &operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        bool operator==(const iterator &) const = default;

       private:
        uint64_t rest_;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

   private:
    uint64_t bits_ = 0;
};

/// Simple undirected graph on at most 64 vertices. Row a of the adjacency is
/// the neighbourhood N_a as a bit-vector.
///
/// Connectivity is not an invariant of the type: intermediate graphs (for
/// example Bell-pair extraction results) are routinely disconnected. Entry
/// points that analyse a state check connectivity themselves.
class Graph {
   public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges);

    int num_vertices() const { return static_cast<int>(rows_.size()); }
    int num_edges() const;
    VertexSet vertices() const { return VertexSet::all(num_vertices()); }
    VertexSet neighbors(Vertex v) const { return VertexSet(rows_.at(v)); }
    int degree(Vertex v) const { return popcount(rows_.at(v)); }
    bool has_edge(Vertex a, Vertex b) const;

    void add_edge(Vertex a, Vertex b);
    void remove_edge(Vertex a, Vertex b);
    void toggle_edge(Vertex a, Vertex b);

    /// Edges (a, b) with a < b in lexicographic order.
    std::vector<Edge> edges() const;

    bool is_connected() const;
    bool is_independent(VertexSet s) const;
    bool is_vertex_cover(VertexSet s) const;

    /// Adjacency rows; equality and ordering of graphs are defined on these
    /// (labeled graphs, no isomorphism).
    std::span<const uint64_t> rows() const { return rows_; }

    bool operator==(const Graph &) const = default;
    std::strong_ordering operator<=>(const Graph &o) const;

   private:
    void check_pair(Vertex a, Vertex b) const;
    std::vector<uint64_t> rows_;
};

/// Local complementation at a: toggles every edge inside N_a.
Graph local_complement(const Graph &g, Vertex a);

struct GraphHash {
    std::size_t operator()(const Graph &g) const;
};

// Named graphs used throughout tests and examples.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);  // vertex 0 is the centre
Graph complete_graph(int n);

}  // namespace graphent

#endif
