#include "graphent/stabilizer/product_state.h"

#include <array>
#include <stdexcept>

namespace graphent {

namespace {

using S = SingleQubitState;

struct Step {
    int phase;
    S out;
};

// Rows: Z+, Z-, X+, X-, Y+, Y-.
constexpr std::array<Step, 6> kX = {{{0, S::ZMinus}, {0, S::ZPlus}, {0, S::XPlus},
                                     {2, S::XMinus}, {1, S::YMinus}, {3, S::YPlus}}};
constexpr std::array<Step, 6> kZ = {{{0, S::ZPlus}, {2, S::ZMinus}, {0, S::XMinus},
                                     {0, S::XPlus}, {0, S::YMinus}, {0, S::YPlus}}};
constexpr std::array<Step, 6> kY = {{{1, S::ZMinus}, {3, S::ZPlus}, {3, S::XMinus},
                                     {1, S::XPlus}, {0, S::YPlus}, {2, S::YMinus}}};

int axis(S s) { return static_cast<int>(s) / 2; }

}  // namespace

char state_char(SingleQubitState s) {
    static constexpr char chars[] = {'0', '1', '+', '-', 'i', 'j'};
    return chars[static_cast<int>(s)];
}

SingleQubitState state_from_char(char c) {
    switch (c) {
        case '0':
            return S::ZPlus;
        case '1':
            return S::ZMinus;
        case '+':
            return S::XPlus;
        case '-':
            return S::XMinus;
        case 'i':
            return S::YPlus;
        case 'j':
            return S::YMinus;
    }
    throw std::invalid_argument(std::string("invalid single-qubit state label '") + c + "'");
}

double overlap2(SingleQubitState a, SingleQubitState b) {
    if (a == b) {
        return 1.0;
    }
    return axis(a) == axis(b) ? 0.0 : 0.5;
}

ProductStabilizerState ProductStabilizerState::from_string(std::string_view text) {
    ProductStabilizerState psi;
    for (char c : text) {
        psi.qubits.push_back(state_from_char(c));
    }
    return psi;
}

std::string ProductStabilizerState::to_string() const {
    std::string out;
    for (S s : qubits) {
        out.push_back(state_char(s));
    }
    return out;
}

double overlap2(const ProductStabilizerState &a, const ProductStabilizerState &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("product states of different lengths");
    }
    double v = 1.0;
    for (int q = 0; q < a.num_qubits(); q++) {
        v *= overlap2(a.qubits[q], b.qubits[q]);
    }
    return v;
}

int PauliAction::sign() const {
    if (phase % 2) {
        throw std::logic_error("Pauli action has an imaginary phase");
    }
    return phase == 0 ? 1 : -1;
}

PauliAction apply_generator(const PauliOperator &p, const ProductStabilizerState &psi) {
    if (p.n != psi.num_qubits()) {
        throw std::invalid_argument("Pauli and product state sizes differ");
    }
    PauliAction r{p.phase, psi};
    for (int q = 0; q < p.n; q++) {
        bool x = (p.x >> q) & 1;
        bool z = (p.z >> q) & 1;
        if (!x && !z) {
            continue;
        }
        const auto &table = x && z ? kY : x ? kX : kZ;
        Step st = table[static_cast<int>(psi.qubits[q])];
        r.phase += st.phase;
        r.state.qubits[q] = st.out;
    }
    r.phase &= 3;
    return r;
}

VertexSet beta_assignment(VertexSet beta, uint64_t index) {
    auto vs = beta.to_vector();
    VertexSet k;
    for (std::size_t j = 0; j < vs.size(); j++) {
        if ((index >> (vs.size() - 1 - j)) & 1) {
            k.insert(vs[j]);
        }
    }
    return k;
}

std::vector<ProductStabilizerState> stabilized_product_basis(const Graph &g, VertexSet alpha) {
    if (!alpha.is_subset_of(g.vertices()) || !g.is_independent(alpha)) {
        throw std::invalid_argument("stabilized_product_basis: alpha " + alpha.to_string() +
                                    " is not an independent set");
    }
    VertexSet beta = g.vertices() - alpha;
    if (beta.size() > 30) {
        throw std::invalid_argument("stabilized_product_basis: more than 2^30 basis states");
    }
    std::vector<ProductStabilizerState> out;
    out.reserve(std::size_t{1} << beta.size());
    for (uint64_t i = 0; i < (uint64_t{1} << beta.size()); i++) {
        VertexSet k = beta_assignment(beta, i);
        ProductStabilizerState psi;
        psi.qubits.resize(g.num_vertices());
        for (Vertex v = 0; v < g.num_vertices(); v++) {
            if (alpha.contains(v)) {
                psi.qubits[v] = parity((g.neighbors(v) & k).bits()) ? S::XMinus : S::XPlus;
            } else {
                psi.qubits[v] = k.contains(v) ? S::ZMinus : S::ZPlus;
            }
        }
        out.push_back(std::move(psi));
    }
    return out;
}

SingleQubitState sqrt_minus_i_x(SingleQubitState s) {
    switch (s) {
        case S::ZPlus:
            return S::YMinus;
        case S::YMinus:
            return S::ZMinus;
        case S::ZMinus:
            return S::YPlus;
        case S::YPlus:
            return S::ZPlus;
        default:
            return s;
    }
}

SingleQubitState sqrt_i_z(SingleQubitState s) {
    switch (s) {
        case S::XPlus:
            return S::YMinus;
        case S::YMinus:
            return S::XMinus;
        case S::XMinus:
            return S::YPlus;
        case S::YPlus:
            return S::XPlus;
        default:
            return s;
    }
}

ProductStabilizerState lc_clifford_transport(const Graph &g, Vertex a, const ProductStabilizerState &psi) {
    if (a < 0 || a >= g.num_vertices()) {
        throw std::out_of_range("lc_clifford_transport: vertex out of range");
    }
    if (psi.num_qubits() != g.num_vertices()) {
        throw std::invalid_argument("lc_clifford_transport: state size differs from graph size");
    }
    ProductStabilizerState out = psi;
    out.qubits[a] = sqrt_minus_i_x(out.qubits[a]);
    for (Vertex b : g.neighbors(a)) {
        out.qubits[b] = sqrt_i_z(out.qubits[b]);
    }
    return out;
}

}  // namespace graphent
