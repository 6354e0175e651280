#ifndef GRAPHENT_GRAPH_LC_ORBIT_H
#define GRAPHENT_GRAPH_LC_ORBIT_H

#include <cstddef>
#include <vector>

#include "graphent/graph/graph.h"

namespace graphent {

constexpr std::size_t kDefaultOrbitCap = 100000;

/// Labeled graphs reachable from a start graph by local complementations, in
/// breadth-first discovery order. Member 0 is the start graph.
struct LcOrbit {
    std::vector<Graph> members;
    /// parent[i] is the member that produced i via local_complement at via[i];
    /// both are -1 for the start graph.
    std::vector<int> parent;
    std::vector<Vertex> via;
    bool truncated = false;

    /// Vertices to complement, in order, to go from the start graph to member i.
    std::vector<Vertex> path_to(std::size_t i) const;
};

LcOrbit enumerate_lc_orbit(const Graph &g, std::size_t cap = kDefaultOrbitCap);

struct OrbitSummary {
    std::size_t size = 0;
    /// Member minimising (|beta|, |M_max|, adjacency rows).
    Graph representative;
    int min_matching = 0;
    int min_vertex_cover = 0;
    bool truncated = false;
    /// Local complementations taking the input graph to the representative.
    std::vector<Vertex> path;
    /// |beta| and |M_max| of the input graph itself.
    int input_vertex_cover = 0;
    int input_matching = 0;
    int representative_vertex_cover = 0;
    int representative_matching = 0;
};

OrbitSummary lc_orbit(const Graph &g, std::size_t cap = kDefaultOrbitCap);

}  // namespace graphent

#endif
