#ifndef GRAPHENT_GRAPH_SOLVERS_H
#define GRAPHENT_GRAPH_SOLVERS_H

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graphent/graph/graph.h"

namespace graphent {

/// A set of pairwise disjoint edges, each stored (a, b) with a < b, sorted.
struct Matching {
    std::vector<Edge> edges;

    int size() const { return static_cast<int>(edges.size()); }
    VertexSet covered() const;
    bool is_perfect(int n) const { return 2 * size() == n; }
    bool operator==(const Matching &) const = default;
};

struct SolverTimeout : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Limits for the exact independent-set search. Zero means unlimited.
struct SolverLimits {
    uint64_t max_nodes = 0;
    std::chrono::milliseconds deadline{0};
};

/// Size of a maximum independent set inside `within` (defaults to all of V).
int max_independent_set_size(const Graph &g, const SolverLimits &limits = {});
int max_independent_set_size(const Graph &g, VertexSet within, const SolverLimits &limits = {});

/// Exact maximum independent set. Among maximum sets the one whose sorted
/// vertex list is lexicographically smallest is returned (vertex 1 is
/// preferred whenever some maximum set contains it, and so on).
VertexSet max_independent_set(const Graph &g, const SolverLimits &limits = {});

/// V minus max_independent_set(g).
VertexSet min_vertex_cover(const Graph &g, const SolverLimits &limits = {});

/// Size of a maximum matching (Edmonds' blossom algorithm).
int max_matching_size(const Graph &g);

/// Maximum matching whose sorted edge list is lexicographically smallest.
Matching max_matching(const Graph &g);

/// Maximum matchings in lexicographic order of their sorted edge lists,
/// stopping after `limit` of them.
std::vector<Matching> max_matchings(const Graph &g, std::size_t limit);

/// BFS 2-colouring. The first class holds the lowest vertex of every
/// component.
std::optional<std::pair<VertexSet, VertexSet>> is_bipartite(const Graph &g);

/// GF(2) rank of the adjacency block between a and V \ a.
int cut_rank(const Graph &g, VertexSet a);

constexpr int kMaxExactCutRankVertices = 22;

/// Largest cut rank over all bipartitions; n <= kMaxExactCutRankVertices.
int max_cut_rank(const Graph &g);

/// Rank over GF(2) of the given rows, each restricted to `columns`.
int gf2_rank(std::vector<uint64_t> rows, uint64_t columns);

}  // namespace graphent

#endif
