#include "graphent/measures/certificates.h"

#include <cmath>
#include <stdexcept>

#include "graphent/graph/solvers.h"

namespace graphent {

int sign_function(VertexSet k, const Graph &g, VertexSet beta) {
    VertexSet ones = k & beta;
    int twice = 0;
    for (Vertex v : ones) {
        twice += (g.neighbors(v) & ones).size();
    }
    return (twice / 2) & 1;
}

Decomposition minimal_decomposition(const Graph &g, VertexSet alpha) {
    VertexSet beta = g.vertices() - alpha;
    auto basis = stabilized_product_basis(g, alpha);
    Decomposition d;
    d.alpha = alpha;
    d.normalization = std::pow(2.0, -0.5 * beta.size());
    d.terms.reserve(basis.size());
    for (uint64_t i = 0; i < basis.size(); i++) {
        int f = sign_function(beta_assignment(beta, i), g, beta);
        d.terms.push_back({f ? -1 : 1, std::move(basis[i])});
    }
    return d;
}

Decomposition minimal_decomposition(const Graph &g) { return minimal_decomposition(g, max_independent_set(g)); }

SeparableStateDescription closest_separable_state(const Graph &g, VertexSet alpha) {
    SeparableStateDescription css;
    css.components = stabilized_product_basis(g, alpha);
    css.weight = 1.0 / static_cast<double>(css.components.size());
    return css;
}

SeparableStateDescription closest_separable_state(const Graph &g) {
    return closest_separable_state(g, max_independent_set(g));
}

StabilizerSumForm css_stabilizer_form(const Graph &g, VertexSet alpha) {
    if (!g.is_independent(alpha)) {
        throw std::invalid_argument("css_stabilizer_form: alpha is not independent");
    }
    StabilizerSumForm form;
    form.group = restricted_subgroup(generators_from_graph(g), alpha);
    form.elements = form.group.elements();
    form.scale = std::pow(2.0, -g.num_vertices());
    return form;
}

StabilizerSumForm css_stabilizer_form(const Graph &g) { return css_stabilizer_form(g, max_independent_set(g)); }

ProductStabilizerState closest_product_state(const Graph &g, VertexSet alpha) {
    if (!g.is_independent(alpha)) {
        throw std::invalid_argument("closest_product_state: alpha is not independent");
    }
    // Basis entry 0: beta qubits |0>, alpha qubits |+>.
    ProductStabilizerState psi;
    psi.qubits.resize(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        psi.qubits[v] = alpha.contains(v) ? SingleQubitState::XPlus : SingleQubitState::ZPlus;
    }
    return psi;
}

ProductStabilizerState closest_product_state(const Graph &g) {
    return closest_product_state(g, max_independent_set(g));
}

ProductStabilizerState transport_state(const Graph &g, const ProductStabilizerState &psi,
                                       const std::vector<Vertex> &lc_sequence) {
    Graph current = g;
    ProductStabilizerState out = psi;
    for (Vertex a : lc_sequence) {
        out = lc_clifford_transport(current, a, out);
        current = local_complement(current, a);
    }
    return out;
}

SeparableStateDescription transport_css(const Graph &g, const SeparableStateDescription &css,
                                        const std::vector<Vertex> &lc_sequence) {
    SeparableStateDescription out = css;
    Graph current = g;
    for (Vertex a : lc_sequence) {
        for (auto &c : out.components) {
            c = lc_clifford_transport(current, a, c);
        }
        current = local_complement(current, a);
    }
    return out;
}

SeparableStateDescription transport_css(const Graph &g, const std::vector<Vertex> &lc_sequence) {
    return transport_css(g, closest_separable_state(g), lc_sequence);
}

}  // namespace graphent
