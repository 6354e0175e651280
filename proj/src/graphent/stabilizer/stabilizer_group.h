#ifndef GRAPHENT_STABILIZER_STABILIZER_GROUP_H
#define GRAPHENT_STABILIZER_STABILIZER_GROUP_H

#include <vector>

#include "graphent/graph/graph.h"
#include "graphent/stabilizer/pauli.h"

namespace graphent {

/// Group generated by a subset of a graph state's generators g_1..g_n.
/// `support` lists which original generator indices are present, and
/// generators[j] is g_{support[j]}.
struct StabilizerGroup {
    int n = 0;
    std::vector<PauliOperator> generators;
    VertexSet support;

    std::size_t order() const { return std::size_t{1} << generators.size(); }

    /// All 2^k products. Element m is the product of generators[j] over the
    /// set bits j of m, taken in increasing j.
    std::vector<PauliOperator> elements() const;
};

/// g_i = X_i Z_{N_i} for every vertex i.
StabilizerGroup generators_from_graph(const Graph &g);

/// Keeps the generators whose original index lies in keep.
StabilizerGroup restricted_subgroup(const StabilizerGroup &s, VertexSet keep);

/// True when some retained generator acts with Z on the X-qubit of another,
/// i.e. the retained vertices are not independent and the group fixes
/// entangled states.
bool entangles_check(const StabilizerGroup &s);

/// True when the generators commute pairwise and their symplectic rows are
/// linearly independent over GF(2).
bool is_valid_stabilizer(const StabilizerGroup &s);

}  // namespace graphent

#endif
