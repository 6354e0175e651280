#ifndef GRAPHENT_MEASURES_EVALUATE_H
#define GRAPHENT_MEASURES_EVALUATE_H

#include <string>
#include <vector>

#include "graphent/graph/graph.h"
#include "graphent/measures/bounds.h"
#include "graphent/measures/certificates.h"

namespace graphent {

/// A measure value in bits: a point when lower == upper, else an interval.
struct MeasureValue {
    double lower = 0;
    double upper = 0;
    bool is_point() const { return lower == upper; }
};

struct EntanglementReport {
    Graph graph;
    BoundsReport bounds;
    MeasureValue schmidt;
    MeasureValue relative_entropy;
    MeasureValue geometric;

    /// The graph whose maximum independent set realises the upper bound and
    /// which the decomposition is written for. It is the input itself when the
    /// input's own |beta| is already the orbit minimum, else the orbit
    /// representative.
    Graph decomposed_graph;
    bool decomposed_input = true;
    /// Local complementations from the input to decomposed_graph.
    std::vector<Vertex> lc_path;
    Decomposition decomposition;

    /// Closest separable and closest product state for the input graph's own
    /// labeling (carried back along lc_path when needed).
    SeparableStateDescription css;
    ProductStabilizerState cps;

    /// Point values are certified: bounds coincide and the orbit was complete.
    bool certified = false;
    bool maximally_entangled = false;
    std::string note;
};

EntanglementReport evaluate(const Graph &g, std::size_t orbit_cap = kDefaultOrbitCap);

}  // namespace graphent

#endif
