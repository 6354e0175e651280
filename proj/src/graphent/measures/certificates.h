#ifndef GRAPHENT_MEASURES_CERTIFICATES_H
#define GRAPHENT_MEASURES_CERTIFICATES_H

#include <string>
#include <vector>

#include "graphent/graph/graph.h"
#include "graphent/stabilizer/product_state.h"
#include "graphent/stabilizer/stabilizer_group.h"

namespace graphent {

struct DecompositionTerm {
    int sign = 1;
    ProductStabilizerState state;
};

/// |G> = normalization * sum_i sign_i |psi_i> over the product basis fixed by
/// the generators of an independent set alpha.
struct Decomposition {
    VertexSet alpha;
    std::vector<DecompositionTerm> terms;
    double normalization = 1.0;  // 2^(-|beta|/2)
};

/// Parity of the edges inside beta whose endpoints are both in k (k being the
/// set of beta vertices carrying a 1). This is the sign exponent of basis
/// term k.
int sign_function(VertexSet k, const Graph &g, VertexSet beta);

Decomposition minimal_decomposition(const Graph &g, VertexSet alpha);

/// Uses the graph's own maximum independent set.
Decomposition minimal_decomposition(const Graph &g);

/// Uniform mixture of orthogonal product states.
struct SeparableStateDescription {
    std::vector<ProductStabilizerState> components;
    double weight = 1.0;
    std::string method = "stabilizer";
};

SeparableStateDescription closest_separable_state(const Graph &g, VertexSet alpha);
SeparableStateDescription closest_separable_state(const Graph &g);

/// The same state written as scale * sum of the 2^|alpha| elements of S_alpha,
/// scale = 2^-n.
struct StabilizerSumForm {
    StabilizerGroup group;
    std::vector<PauliOperator> elements;
    double scale = 1.0;
};

StabilizerSumForm css_stabilizer_form(const Graph &g, VertexSet alpha);
StabilizerSumForm css_stabilizer_form(const Graph &g);

/// First state of the product basis; its squared overlap with |G> is
/// 2^-|beta|.
ProductStabilizerState closest_product_state(const Graph &g, VertexSet alpha);
ProductStabilizerState closest_product_state(const Graph &g);

/// Carries a CSS of |g> along local complementations at lc_sequence (applied
/// in order). Components pick up the local Clifford of each step.
SeparableStateDescription transport_css(const Graph &g, const SeparableStateDescription &css,
                                        const std::vector<Vertex> &lc_sequence);

/// closest_separable_state(g) transported along lc_sequence.
SeparableStateDescription transport_css(const Graph &g, const std::vector<Vertex> &lc_sequence);

/// Transports a single product state the same way.
ProductStabilizerState transport_state(const Graph &g, const ProductStabilizerState &psi,
                                       const std::vector<Vertex> &lc_sequence);

}  // namespace graphent

#endif
