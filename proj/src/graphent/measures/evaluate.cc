#include "graphent/measures/evaluate.h"

#include <algorithm>

#include "graphent/graph/solvers.h"

namespace graphent {

EntanglementReport evaluate(const Graph &g, std::size_t orbit_cap) {
    EntanglementReport r;
    r.graph = g;
    r.bounds = bounds(g, orbit_cap);

    if (r.bounds.input_vertex_cover == r.bounds.upper) {
        r.decomposed_graph = g;
        r.decomposed_input = true;
    } else {
        r.decomposed_graph = r.bounds.representative;
        r.decomposed_input = false;
        r.lc_path = r.bounds.lc_path;
    }
    VertexSet alpha = max_independent_set(r.decomposed_graph);
    r.decomposition = minimal_decomposition(r.decomposed_graph, alpha);

    SeparableStateDescription css = closest_separable_state(r.decomposed_graph, alpha);
    ProductStabilizerState cps = closest_product_state(r.decomposed_graph, alpha);
    if (!r.decomposed_input) {
        // Local complementation is an involution, so walking the path backwards
        // from the decomposed graph returns to the input.
        std::vector<Vertex> back(r.lc_path.rbegin(), r.lc_path.rend());
        css = transport_css(r.decomposed_graph, css, back);
        cps = transport_state(r.decomposed_graph, cps, back);
    }
    r.css = std::move(css);
    r.cps = std::move(cps);

    double lo = r.bounds.lower;
    double hi = r.bounds.upper;
    r.certified = r.bounds.coincide && !r.bounds.truncated;
    if (r.bounds.truncated) {
        // Orbit minima over a partial orbit can overshoot the true lower bound.
        // Fall back to the largest cut rank, which bounds it from below.
        lo = g.num_vertices() <= kMaxExactCutRankVertices ? max_cut_rank(g) : (g.num_vertices() > 1 ? 1 : 0);
        r.certified = lo == hi;
        r.note = "orbit enumeration hit the cap of " + std::to_string(orbit_cap) +
                 " graphs; orbit minima are only upper estimates, lower bound taken from the largest cut rank";
    } else if (!r.bounds.coincide) {
        r.note = "bounds differ; css and cps certify the upper bound only";
    }
    r.schmidt = r.relative_entropy = r.geometric = MeasureValue{lo, hi};
    r.maximally_entangled = r.certified && r.bounds.upper == g.num_vertices() / 2;
    return r;
}

}  // namespace graphent
