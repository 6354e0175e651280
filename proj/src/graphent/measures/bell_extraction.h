#ifndef GRAPHENT_MEASURES_BELL_EXTRACTION_H
#define GRAPHENT_MEASURES_BELL_EXTRACTION_H

#include <cstddef>
#include <string>
#include <vector>

#include "graphent/graph/graph.h"
#include "graphent/graph/solvers.h"

namespace graphent {

struct BellMove {
    enum class Kind { ToggleEdge, LocalComplement };
    Kind kind;
    Vertex a;
    Vertex b = -1;  // only for ToggleEdge

    std::string to_string() const;
    bool operator==(const BellMove &) const = default;
};

struct BellExtraction {
    bool success = false;
    std::string failure;
    /// One endpoint of every matched edge; B is the rest.
    VertexSet side_a;
    Matching matching;
    std::vector<BellMove> moves;
    Graph final_graph;
};

struct BellLimits {
    /// Cap on local complementations, as a multiple of N.
    int lc_per_vertex = 4;
    std::size_t max_states = 200000;
    /// Endpoint choices tried per matching (2^|m| in total when large enough).
    std::size_t max_sides = 1024;
};

/// Turns g into |m| disjoint Bell pairs across a bipartition that puts one
/// endpoint of every matched edge in A, using CZ toggles inside A or inside B
/// and local complementations. Matched edges stay present after every move.
///
/// Every endpoint choice is tried in increasing order of the A bitmask. For a
/// fixed choice, the cross-adjacency block (rows A, columns B) is searched
/// breadth-first under row and column additions. Each addition is a toggle
/// inside the side followed by a local complementation at the pivot. Stray
/// intra-side edges are removed by toggles after every step. The move list is
/// replayed on g and the result checked before success is reported.
BellExtraction bell_extraction(const Graph &g, const Matching &m, const BellLimits &limits = {});

/// Tries maximum matchings of g in lexicographic order until one extracts.
BellExtraction bell_extraction_any(const Graph &g, std::size_t max_matchings_tried = 64,
                                   const BellLimits &limits = {});

/// Replays moves on g; empty string when the postcondition holds (final graph
/// is exactly the matched edges, all crossing, every matched edge present
/// after each move), otherwise a description of the first violation.
std::string verify_bell_extraction(const Graph &g, const Matching &m, VertexSet side_a,
                                   const std::vector<BellMove> &moves);

}  // namespace graphent

#endif
