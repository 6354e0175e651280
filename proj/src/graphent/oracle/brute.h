#ifndef GRAPHENT_ORACLE_BRUTE_H
#define GRAPHENT_ORACLE_BRUTE_H

#include <cstdint>
#include <vector>

#include "graphent/graph/graph.h"

namespace graphent::oracle {

// Exhaustive references for the combinatorial solvers. They share nothing
// with graph/solvers.cc beyond the Graph type.

struct BruteMis {
    int size = 0;
    /// Every maximum independent set, in increasing order of the sorted
    /// vertex list.
    std::vector<VertexSet> all;
};

/// Subset enumeration; n <= 16.
BruteMis brute_mis(const Graph &g);

/// Size of a maximum matching by search over edge subsets; n <= 12.
int brute_matching(const Graph &g);

struct BruteOrbit {
    std::vector<Graph> members;  // sorted
    int min_matching = 0;
    int min_vertex_cover = 0;
};

/// Closure under local complementation by repeated sweeps; n <= 8.
BruteOrbit brute_orbit(const Graph &g);

/// Every connected labeled graph on n vertices (n <= 6), in increasing order
/// of the edge bitmask over the pairs (1,2), (1,3), ..., (n-1,n).
std::vector<Graph> all_connected_graphs(int n);

/// Random connected graph: each pair independently with probability p,
/// resampled until connected.
template <typename Rng>
Graph random_connected_graph(int n, double p, Rng &rng);

}  // namespace graphent::oracle

#include "graphent/oracle/brute.inl"

#endif
