#ifndef GRAPHENT_STABILIZER_PRODUCT_STATE_H
#define GRAPHENT_STABILIZER_PRODUCT_STATE_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "graphent/graph/graph.h"
#include "graphent/stabilizer/pauli.h"

namespace graphent {

/// The six single-qubit stabilizer states |0>, |1>, |+>, |->, |+i>, |-i>.
enum class SingleQubitState : uint8_t { ZPlus, ZMinus, XPlus, XMinus, YPlus, YMinus };

/// '0', '1', '+', '-', 'i', 'j' respectively.
char state_char(SingleQubitState s);
SingleQubitState state_from_char(char c);

/// Squared overlap |<a|b>|^2: 1, 0 or 1/2.
double overlap2(SingleQubitState a, SingleQubitState b);

struct ProductStabilizerState {
    std::vector<SingleQubitState> qubits;

    int num_qubits() const { return static_cast<int>(qubits.size()); }

    static ProductStabilizerState from_string(std::string_view text);
    std::string to_string() const;

    bool operator==(const ProductStabilizerState &) const = default;
    auto operator<=>(const ProductStabilizerState &) const = default;
};

/// |<a|b>|^2, factorised over qubits.
double overlap2(const ProductStabilizerState &a, const ProductStabilizerState &b);

/// Result of applying a Pauli operator: p|psi> = i^phase |state>.
struct PauliAction {
    int phase = 0;
    ProductStabilizerState state;

    /// +1 or -1; throws if the phase is imaginary.
    int sign() const;
};

/// Applies p to psi. All six labels are handled; imaginary factors only
/// appear when p acts with X or Z on a Y eigenstate (or Y on an X/Z one).
PauliAction apply_generator(const PauliOperator &p, const ProductStabilizerState &psi);

/// Product states fixed by the generators g_a, a in alpha. The states are
/// indexed by bit-strings k over beta = V \ alpha: beta qubit b is |k_b>,
/// alpha qubit a is |+> or |-> by the parity of k on N_a. Entry i uses the
/// binary digits of i with the smallest beta vertex as the most significant.
std::vector<ProductStabilizerState> stabilized_product_basis(const Graph &g, VertexSet alpha);

/// Beta vertices set to 1 in the bit-string of index i (see above).
VertexSet beta_assignment(VertexSet beta, uint64_t index);

/// Single-qubit Clifford sqrt(-iX) = (I - iX)/sqrt(2), as a label map.
SingleQubitState sqrt_minus_i_x(SingleQubitState s);

/// Single-qubit Clifford sqrt(iZ) = (I + iZ)/sqrt(2), as a label map.
SingleQubitState sqrt_i_z(SingleQubitState s);

/// Applies U_a = sqrt(-iX)_a (x) sqrt(iZ)_{N_a} (neighbourhood in g) to psi,
/// dropping the global phase. With this convention |tau_a(G)> is
/// proportional to U_a |G>.
ProductStabilizerState lc_clifford_transport(const Graph &g, Vertex a, const ProductStabilizerState &psi);

}  // namespace graphent

#endif
