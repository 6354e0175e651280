#include "graphent/alt_css/alt_css.h"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "graphent/graph/solvers.h"

namespace graphent {

namespace {

using Qubit = Eigen::Vector2cd;

const double kR = std::sqrt(0.5);

Qubit z_state(int bit) { return bit ? Qubit(0, 1) : Qubit(1, 0); }
Qubit x_state(int bit) { return bit ? Qubit(kR, -kR) : Qubit(kR, kR); }

SingleQubitState identify(const Qubit &v) {
    constexpr std::array<SingleQubitState, 6> labels{SingleQubitState::ZPlus,  SingleQubitState::ZMinus,
                                                     SingleQubitState::XPlus,  SingleQubitState::XMinus,
                                                     SingleQubitState::YPlus,  SingleQubitState::YMinus};
    Qubit u = v / v.norm();
    for (SingleQubitState s : labels) {
        ProductStabilizerState one{{s}};
        Eigen::VectorXcd ref = product_vector(one);
        if (std::abs(std::abs(ref.dot(u)) - 1.0) < 1e-9) {
            return s;
        }
    }
    throw std::logic_error("projected site state is not a Pauli eigenstate");
}

Eigen::VectorXcd kron_all(const std::vector<Qubit> &sites) {
    int n = static_cast<int>(sites.size());
    Eigen::VectorXcd v(Eigen::Index{1} << n);
    for (Eigen::Index idx = 0; idx < v.size(); idx++) {
        std::complex<double> amp = 1.0;
        for (int q = 0; q < n; q++) {
            amp *= sites[q][(idx >> (n - 1 - q)) & 1];
        }
        v[idx] = amp;
    }
    return v;
}

void check_alpha(const Graph &g, VertexSet alpha) {
    if (!alpha.is_subset_of(g.vertices()) || !g.is_independent(alpha)) {
        throw std::invalid_argument("alpha " + alpha.to_string() + " is not an independent set");
    }
}

// P^A: |0><0...0| + |1><1...1|.
Qubit project_a(const std::vector<Qubit> &virtuals) {
    std::complex<double> amp0 = 1.0, amp1 = 1.0;
    for (const Qubit &v : virtuals) {
        amp0 *= v[0];
        amp1 *= v[1];
    }
    return Qubit(amp0, amp1);
}

// P^B: |+><+~| + |-><-~|, with |+~> (|-~>) the normalised uniform
// superposition of X strings with an even (odd) number of minuses.
Qubit project_b(const std::vector<Qubit> &virtuals) {
    std::complex<double> sum = 1.0, diff = 1.0;
    for (const Qubit &v : virtuals) {
        std::complex<double> plus = (v[0] + v[1]) * kR;
        std::complex<double> minus = (v[0] - v[1]) * kR;
        sum *= plus + minus;
        diff *= plus - minus;
    }
    int d = static_cast<int>(virtuals.size());
    double norm = d == 0 ? 1.0 : std::pow(2.0, -(d - 1) / 2.0);
    std::complex<double> even = (sum + diff) / 2.0 * norm;
    std::complex<double> odd = (sum - diff) / 2.0 * norm;
    return even * x_state(0) + odd * x_state(1);
}

struct Accumulator {
    int n;
    std::vector<ProductStabilizerState> components;
    std::vector<double> weights;
    std::optional<DensityMatrix> dense;

    explicit Accumulator(int n) : n(n) {
        if (n <= kMaxDensityQubits) {
            dense = DensityMatrix::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
        }
    }

    void add(const std::vector<Qubit> &sites) {
        double w = 1.0;
        ProductStabilizerState label;
        for (const Qubit &s : sites) {
            w *= s.squaredNorm();
            label.qubits.push_back(identify(s));
        }
        components.push_back(std::move(label));
        weights.push_back(w);
        if (dense) {
            Eigen::VectorXcd v = kron_all(sites);
            *dense += v * v.adjoint();
        }
    }

    AltCss finish(const char *method) {
        AltCss out;
        double total = 0;
        for (double w : weights) {
            total += w;
        }
        for (double w : weights) {
            if (std::abs(w - weights.front()) > 1e-12 * total) {
                throw std::logic_error("mixture weights are not uniform");
            }
        }
        out.description.components = std::move(components);
        out.description.weight = 1.0 / static_cast<double>(weights.size());
        out.description.method = method;
        if (dense) {
            *dense /= dense->trace().real();
            out.dense = std::move(dense);
        }
        return out;
    }
};

}  // namespace

Vertex VirtualLayout::site_of(int virtual_id) const {
    const VirtualEdge &e = edges.at(virtual_id / 2);
    return virtual_id % 2 == 0 ? e.a : e.b;
}

VirtualLayout assign_edge_states(const Graph &g, VertexSet alpha) {
    check_alpha(g, alpha);
    VirtualLayout layout;
    layout.alpha = alpha;
    layout.site_virtuals.resize(g.num_vertices());
    for (auto [a, b] : g.edges()) {
        VirtualEdge e{a, b, EdgeStateKind::A, layout.num_virtual(), layout.num_virtual() + 1};
        if (!alpha.contains(a) && alpha.contains(b)) {
            e.kind = EdgeStateKind::B;
        }
        bool orange_first = e.kind == EdgeStateKind::A;
        layout.colours.push_back(orange_first ? VirtualColour::Orange : VirtualColour::Blue);
        layout.colours.push_back(orange_first ? VirtualColour::Blue : VirtualColour::Orange);
        layout.site_virtuals[a].push_back(e.virtual_a);
        layout.site_virtuals[b].push_back(e.virtual_b);
        layout.edges.push_back(e);
    }
    return layout;
}

AltCss peps_css(const Graph &g, VertexSet alpha) {
    VirtualLayout layout = assign_edge_states(g, alpha);
    int n = g.num_vertices();
    int m = static_cast<int>(layout.edges.size());
    Accumulator acc(n);

    // Each edge state is a two-term mixture labelled by s_e: the orange end is
    // |+> or |->, the blue end |0> or |1>. The site projectors kill every
    // label whose blue values at one site disagree, so the labels are walked
    // depth first and such branches cut as soon as they appear.
    std::vector<int> labels(m, 0);
    std::vector<int> blue_value(n, -1);
    std::vector<Qubit> virtuals(layout.num_virtual());

    auto leaf = [&]() {
        for (int e = 0; e < m; e++) {
            const VirtualEdge &edge = layout.edges[e];
            bool orange_first = layout.colours[edge.virtual_a] == VirtualColour::Orange;
            virtuals[edge.virtual_a] = orange_first ? x_state(labels[e]) : z_state(labels[e]);
            virtuals[edge.virtual_b] = orange_first ? z_state(labels[e]) : x_state(labels[e]);
        }
        std::vector<Qubit> sites(n);
        for (Vertex v = 0; v < n; v++) {
            std::vector<Qubit> local;
            for (int id : layout.site_virtuals[v]) {
                local.push_back(virtuals[id]);
            }
            if (local.size() == 1) {
                sites[v] = local.front();
            } else {
                sites[v] = alpha.contains(v) ? project_b(local) : project_a(local);
            }
            if (sites[v].squaredNorm() < 1e-24) {
                return;
            }
        }
        acc.add(sites);
    };

    auto walk = [&](auto &&self, int e) -> void {
        if (e == m) {
            leaf();
            return;
        }
        const VirtualEdge &edge = layout.edges[e];
        Vertex blue = layout.colours[edge.virtual_a] == VirtualColour::Blue ? edge.a : edge.b;
        for (int s = 0; s < 2; s++) {
            bool fresh = blue_value[blue] < 0;
            if (!fresh && blue_value[blue] != s) {
                continue;
            }
            blue_value[blue] = s;
            labels[e] = s;
            self(self, e + 1);
            if (fresh) {
                blue_value[blue] = -1;
            }
        }
    };
    walk(walk, 0);
    if (acc.weights.empty()) {
        throw std::logic_error("PEPs projection annihilated every term");
    }
    return acc.finish("peps");
}

AltCss peps_css(const Graph &g) { return peps_css(g, max_independent_set(g)); }

Eigen::VectorXcd phase_noise_vector(const Graph &g, const PhaseNoiseSpec &spec) {
    int n = g.num_vertices();
    if (n > kMaxDensityQubits) {
        throw std::invalid_argument("phase_noise_vector: too many qubits");
    }
    Eigen::VectorXcd v(Eigen::Index{1} << n);
    double norm = std::pow(2.0, -n / 2.0);
    for (Eigen::Index idx = 0; idx < v.size(); idx++) {
        uint64_t x = 0;
        for (int q = 0; q < n; q++) {
            if ((idx >> (n - 1 - q)) & 1) {
                x |= uint64_t{1} << q;
            }
        }
        std::complex<double> amp = norm;
        for (Vertex j = 0; j < n; j++) {
            if (!((x >> j) & 1)) {
                continue;
            }
            if (spec.beta.contains(j)) {
                amp *= std::polar(1.0, spec.phases.at(j));
            }
            uint64_t later = g.neighbors(j).bits() & ~low_mask(j + 1);
            if (popcount(later & x) & 1) {
                amp = -amp;
            }
        }
        v[idx] = amp;
    }
    return v;
}

AltCss noise_css(const Graph &g, VertexSet beta) {
    int n = g.num_vertices();
    VertexSet alpha = g.vertices() - beta;
    check_alpha(g, alpha);
    if (beta.size() > 30) {
        throw std::invalid_argument("noise_css: beta too large");
    }
    Accumulator acc(n);
    uint64_t count = uint64_t{1} << beta.size();
    for (uint64_t t = 0; t < count; t++) {
        // The phase average removes every coherence between distinct beta
        // strings k, leaving |G> projected onto each k: beta qubits in |k>,
        // alpha qubit a in Z^{|N_a & k|} |+>.
        VertexSet k = beta_assignment(beta, t);
        std::vector<Qubit> sites(n);
        for (Vertex v = 0; v < n; v++) {
            sites[v] = beta.contains(v) ? z_state(k.contains(v)) : x_state((g.neighbors(v) & k).size() & 1);
        }
        acc.add(sites);
    }
    AltCss out = acc.finish("noise");
    if (out.dense) {
        // Replace the assembled matrix by the literal two-point average.
        DensityMatrix avg = DensityMatrix::Zero(out.dense->rows(), out.dense->cols());
        PhaseNoiseSpec spec{beta, std::vector<double>(n, 0.0)};
        std::vector<Vertex> bs = beta.to_vector();
        for (uint64_t t = 0; t < count; t++) {
            for (std::size_t i = 0; i < bs.size(); i++) {
                spec.phases[bs[i]] = ((t >> i) & 1) ? std::numbers::pi : 0.0;
            }
            Eigen::VectorXcd phi = phase_noise_vector(g, spec);
            avg += phi * phi.adjoint();
        }
        out.dense = avg / static_cast<double>(count);
    }
    return out;
}

AltCss noise_css(const Graph &g) { return noise_css(g, min_vertex_cover(g)); }

DensityMatrix noise_quadrature(const Graph &g, VertexSet beta, int points) {
    int n = g.num_vertices();
    PhaseNoiseSpec spec{beta, std::vector<double>(n, 0.0)};
    Eigen::VectorXcd phi = phase_noise_vector(g, spec);
    DensityMatrix rho = phi * phi.adjoint();
    // The phases enter as diag(1, e^{i phi_j}) on qubit j, so the multiple
    // integral is a sequence of single-qubit averages.
    for (Vertex j : beta) {
        DensityMatrix avg = DensityMatrix::Zero(rho.rows(), rho.cols());
        for (int p = 0; p < points; p++) {
            double angle = 2 * std::numbers::pi * (p + 0.5) / points;
            Eigen::VectorXcd d(rho.rows());
            for (Eigen::Index idx = 0; idx < d.size(); idx++) {
                d[idx] = ((idx >> (n - 1 - j)) & 1) ? std::polar(1.0, angle) : 1.0;
            }
            avg += d.asDiagonal() * rho * d.conjugate().asDiagonal();
        }
        rho = avg / static_cast<double>(points);
    }
    return rho;
}

}  // namespace graphent
