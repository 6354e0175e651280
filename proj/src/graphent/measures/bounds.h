#ifndef GRAPHENT_MEASURES_BOUNDS_H
#define GRAPHENT_MEASURES_BOUNDS_H

#include <string_view>
#include <vector>

#include "graphent/graph/graph.h"
#include "graphent/graph/lc_orbit.h"

namespace graphent {

enum class Classification {
    AlphaLtHalf,
    AlphaGtHalf,
    AlphaEqHalfPerfect,
    AlphaEqHalfImperfect,
    BipartiteKonig,
};

/// "ALPHA_LT_HALF", "ALPHA_GT_HALF", ...
std::string_view classification_name(Classification c);

/// Whether the class predicts equal lower and upper bounds.
bool predicts_equal(Classification c);

/// Size-based prediction for a non-bipartite orbit representative.
Classification classify(int alpha_size, int n, bool matching_is_perfect);

struct BoundsReport {
    int lower = 0;  // orbit minimum of |M_max|
    int upper = 0;  // orbit minimum of |beta|
    int alpha_size = 0;  // |alpha| of the representative
    bool coincide = false;
    Classification classification = Classification::BipartiteKonig;
    Graph representative;
    /// Local complementations taking the input to the representative.
    std::vector<Vertex> lc_path;
    std::size_t orbit_size = 0;
    /// The orbit was cut off at the cap: the minima are then only upper
    /// estimates of the true orbit minima and nothing is certified.
    bool truncated = false;
    /// |beta| of the input graph itself.
    int input_vertex_cover = 0;
};

BoundsReport bounds(const Graph &g, std::size_t orbit_cap = kDefaultOrbitCap);

}  // namespace graphent

#endif
