#include "graphent/measures/bounds.h"

#include <stdexcept>

#include "graphent/graph/solvers.h"

namespace graphent {

std::string_view classification_name(Classification c) {
    switch (c) {
        case Classification::AlphaLtHalf:
            return "ALPHA_LT_HALF";
        case Classification::AlphaGtHalf:
            return "ALPHA_GT_HALF";
        case Classification::AlphaEqHalfPerfect:
            return "ALPHA_EQ_HALF_PERFECT";
        case Classification::AlphaEqHalfImperfect:
            return "ALPHA_EQ_HALF_IMPERFECT";
        case Classification::BipartiteKonig:
            return "BIPARTITE_KONIG";
    }
    return "UNKNOWN";
}

bool predicts_equal(Classification c) {
    return c == Classification::AlphaGtHalf || c == Classification::AlphaEqHalfPerfect ||
           c == Classification::BipartiteKonig;
}

Classification classify(int alpha_size, int n, bool matching_is_perfect) {
    if (2 * alpha_size < n) {
        return Classification::AlphaLtHalf;
    }
    if (2 * alpha_size > n) {
        return Classification::AlphaGtHalf;
    }
    return matching_is_perfect ? Classification::AlphaEqHalfPerfect : Classification::AlphaEqHalfImperfect;
}

BoundsReport bounds(const Graph &g, std::size_t orbit_cap) {
    if (!g.is_connected()) {
        throw std::invalid_argument("bounds: graph is disconnected");
    }
    OrbitSummary orbit = lc_orbit(g, orbit_cap);
    BoundsReport r;
    r.lower = orbit.min_matching;
    r.upper = orbit.min_vertex_cover;
    r.coincide = r.lower == r.upper;
    r.representative = orbit.representative;
    r.lc_path = orbit.path;
    r.orbit_size = orbit.size;
    r.truncated = orbit.truncated;
    r.input_vertex_cover = orbit.input_vertex_cover;
    int n = g.num_vertices();
    r.alpha_size = n - orbit.representative_vertex_cover;
    if (is_bipartite(g) || is_bipartite(orbit.representative)) {
        r.classification = Classification::BipartiteKonig;
    } else {
        r.classification = classify(r.alpha_size, n, 2 * orbit.representative_matching == n);
    }
    return r;
}

}  // namespace graphent
