#ifndef GRAPHENT_ALT_CSS_ALT_CSS_H
#define GRAPHENT_ALT_CSS_ALT_CSS_H

#include <optional>
#include <vector>

#include "graphent/graph/graph.h"
#include "graphent/measures/certificates.h"
#include "graphent/measures/density.h"

namespace graphent {

// Two constructions of the closest separable state that do not go through
// stabilizer generators: correlated pairs on virtual qubits followed by site
// projections, and averaging the graph state over relative phases on beta.

enum class VirtualColour : uint8_t { Orange, Blue };  // X basis, Z basis

/// omega^A = |+0><+0| + |-1><-1| puts orange on the first virtual qubit of
/// the edge, omega^B = |0+><0+| + |1-><1-| on the second.
enum class EdgeStateKind : uint8_t { A, B };

struct VirtualEdge {
    Vertex a = 0;  // a < b
    Vertex b = 0;
    EdgeStateKind kind = EdgeStateKind::A;
    int virtual_a = 0;
    int virtual_b = 0;
};

struct VirtualLayout {
    VertexSet alpha;
    std::vector<VirtualEdge> edges;                // in Graph::edges() order
    std::vector<std::vector<int>> site_virtuals;  // per physical site, by edge order
    std::vector<VirtualColour> colours;            // per virtual qubit

    int num_virtual() const { return static_cast<int>(colours.size()); }
    Vertex site_of(int virtual_id) const;
};

/// Orange goes on the alpha end of every edge. Edges inside beta get
/// omega^A, i.e. orange on the smaller endpoint. Throws if alpha is not
/// independent.
VirtualLayout assign_edge_states(const Graph &g, VertexSet alpha);

/// A separable state given both as a component list and, for
/// n <= kMaxDensityQubits, as a trace-one dense matrix assembled directly
/// from the construction.
struct AltCss {
    SeparableStateDescription description;
    std::optional<DensityMatrix> dense;
};

/// Mixture over edge-state labels of the projected virtual product states.
/// Sites of degree one are left unprojected.
AltCss peps_css(const Graph &g, VertexSet alpha);
AltCss peps_css(const Graph &g);

/// Relative phases phi_j on the vertices of beta (m(j) = 1 exactly there).
struct PhaseNoiseSpec {
    VertexSet beta;
    std::vector<double> phases;  // indexed by vertex; ignored off beta
};

/// |Phi> = 2^(-n/2) prod_j (|0>_j + e^{i phi_j m(j)} |1>_j Z_{N'_j}), with N'_j
/// the neighbours of j that come after it.
Eigen::VectorXcd phase_noise_vector(const Graph &g, const PhaseNoiseSpec &spec);

/// Phase average of |Phi><Phi|. Each cross term carries e^{+-i phi_j}, so the
/// two points phi_j in {0, pi} give the same average as the full integral.
AltCss noise_css(const Graph &g, VertexSet beta);
AltCss noise_css(const Graph &g);

/// Average of |Phi><Phi| over `points` equally spaced values of every phase.
DensityMatrix noise_quadrature(const Graph &g, VertexSet beta, int points);

}  // namespace graphent

#endif
