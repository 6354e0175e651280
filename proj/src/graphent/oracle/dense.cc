#include "graphent/oracle/dense.h"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace graphent::oracle {

namespace {

void check_qubits(int n, int cap, const char *what) {
    if (n > cap) {
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(n) + " qubits exceeds the cap of " +
                                    std::to_string(cap));
    }
}

// Bit of basis index `idx` that holds qubit q.
inline int qubit_bit(uint64_t idx, int n, int q) { return (idx >> (n - 1 - q)) & 1; }

}  // namespace

int qubit_count(const DenseState &psi) {
    int n = 0;
    while ((Eigen::Index{1} << n) < psi.size()) {
        n++;
    }
    return n;
}

DenseState statevector(const Graph &g) { return graph_basis_state(g, VertexSet()); }

DenseState graph_basis_state(const Graph &g, VertexSet k) {
    int n = g.num_vertices();
    check_qubits(n, kMaxStatevectorQubits, "statevector");
    DenseState psi(Eigen::Index{1} << n);
    double amp = std::pow(2.0, -0.5 * n);
    auto edges = g.edges();
    for (uint64_t idx = 0; idx < (uint64_t{1} << n); idx++) {
        int sign = 0;
        for (auto [a, b] : edges) {
            sign ^= qubit_bit(idx, n, a) & qubit_bit(idx, n, b);
        }
        for (Vertex v : k) {
            sign ^= qubit_bit(idx, n, v);
        }
        psi[idx] = sign ? -amp : amp;
    }
    return psi;
}

DenseDensity pauli_dense(const PauliOperator &p) {
    check_qubits(p.n, kMaxDenseQubits, "pauli_dense");
    static const Complex i1(0, 1);
    Eigen::Matrix2cd I = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd X, Y, Z;
    X << 0, 1, 1, 0;
    Y << 0, -i1, i1, 0;
    Z << 1, 0, 0, -1;
    DenseDensity m = DenseDensity::Identity(1, 1);
    for (int q = 0; q < p.n; q++) {
        const Eigen::Matrix2cd &f = p.letter(q) == 'X' ? X : p.letter(q) == 'Y' ? Y : p.letter(q) == 'Z' ? Z : I;
        DenseDensity next(m.rows() * 2, m.cols() * 2);
        for (int r = 0; r < 2; r++) {
            for (int c = 0; c < 2; c++) {
                // Qubit q becomes the new least significant index bit.
                for (Eigen::Index i = 0; i < m.rows(); i++) {
                    for (Eigen::Index j = 0; j < m.cols(); j++) {
                        next(2 * i + r, 2 * j + c) = m(i, j) * f(r, c);
                    }
                }
            }
        }
        m = std::move(next);
    }
    static const Complex phases[] = {1.0, i1, -1.0, -i1};
    return m * phases[p.phase & 3];
}

Eigen::Vector2cd single_qubit_vector(SingleQubitState s) {
    const double r = 1.0 / std::sqrt(2.0);
    const Complex i1(0, 1);
    switch (s) {
        case SingleQubitState::ZPlus:
            return {1, 0};
        case SingleQubitState::ZMinus:
            return {0, 1};
        case SingleQubitState::XPlus:
            return {r, r};
        case SingleQubitState::XMinus:
            return {r, -r};
        case SingleQubitState::YPlus:
            return {r, i1 * r};
        case SingleQubitState::YMinus:
            return {r, -i1 * r};
    }
    throw std::logic_error("unknown single-qubit state");
}

DenseState product_state_vector(const ProductStabilizerState &psi) {
    int n = psi.num_qubits();
    check_qubits(n, kMaxStatevectorQubits, "product_state_vector");
    DenseState out = DenseState::Ones(1);
    for (int q = 0; q < n; q++) {
        Eigen::Vector2cd f = single_qubit_vector(psi.qubits[q]);
        DenseState next(out.size() * 2);
        for (Eigen::Index i = 0; i < out.size(); i++) {
            next[2 * i] = out[i] * f[0];
            next[2 * i + 1] = out[i] * f[1];
        }
        out = std::move(next);
    }
    return out;
}

DenseState apply_single_qubit(const DenseState &psi, int n, int q, const Eigen::Matrix2cd &u) {
    DenseState out = psi;
    uint64_t mask = uint64_t{1} << (n - 1 - q);
    for (uint64_t idx = 0; idx < static_cast<uint64_t>(psi.size()); idx++) {
        if (idx & mask) {
            continue;
        }
        Complex a0 = psi[idx];
        Complex a1 = psi[idx | mask];
        out[idx] = u(0, 0) * a0 + u(0, 1) * a1;
        out[idx | mask] = u(1, 0) * a0 + u(1, 1) * a1;
    }
    return out;
}

Eigen::Matrix2cd sqrt_minus_i_x_matrix() {
    const Complex i1(0, 1);
    Eigen::Matrix2cd m;
    m << 1, -i1, -i1, 1;
    return m / std::sqrt(2.0);
}

Eigen::Matrix2cd sqrt_i_z_matrix() {
    const Complex i1(0, 1);
    Eigen::Matrix2cd m;
    m << 1.0 + i1, 0, 0, 1.0 - i1;
    return m / std::sqrt(2.0);
}

DenseDensity projector(const DenseState &psi) { return psi * psi.adjoint(); }

RelativeEntropy relative_entropy_pure(const DenseState &psi, const DenseDensity &omega) {
    if (omega.rows() != psi.size() || omega.cols() != psi.size()) {
        throw std::invalid_argument("relative_entropy_pure: dimension mismatch");
    }
    RelativeEntropy out;
    Eigen::VectorXd vals;
    DenseDensity vecs;
    Eigen::SelfAdjointEigenSolver<DenseDensity> eig(omega);
    if (eig.info() == Eigen::Success) {
        vals = eig.eigenvalues();
        vecs = eig.eigenvectors();
    } else {
        // The tridiagonal QL iteration can stall on very degenerate spectra.
        // For a positive semidefinite omega the SVD is an eigendecomposition.
        Eigen::JacobiSVD<DenseDensity> svd(omega, Eigen::ComputeFullU);
        vals = svd.singularValues();
        vecs = svd.matrixU();
        out.diagnostic = "eigenvalues taken from an SVD";
    }
    for (Eigen::Index j = 0; j < vals.size(); j++) {
        double weight = std::norm(vecs.col(j).dot(psi));
        if (vals[j] <= 1e-14) {
            if (weight > 1e-12) {
                out.bits = std::numeric_limits<double>::infinity();
                out.diagnostic = "state has weight " + std::to_string(weight) +
                                 " outside the support of omega";
                return out;
            }
            continue;
        }
        out.bits -= weight * std::log2(vals[j]);
    }
    return out;
}

double overlap2(const DenseState &psi, const ProductStabilizerState &phi) {
    DenseState v = product_state_vector(phi);
    if (v.size() != psi.size()) {
        throw std::invalid_argument("overlap2: dimension mismatch");
    }
    return std::norm(v.dot(psi));
}

double best_product_overlap(const DenseState &psi, int n, int restarts, int iterations, uint64_t seed) {
    check_qubits(n, 8, "best_product_overlap");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    double best = 0.0;
    std::vector<Eigen::Vector2cd> site(n);
    for (int r = 0; r < restarts; r++) {
        for (auto &f : site) {
            f = Eigen::Vector2cd(Complex(normal(rng), normal(rng)), Complex(normal(rng), normal(rng)));
            f.normalize();
        }
        double value = 0.0;
        for (int it = 0; it < iterations; it++) {
            double before = value;
            for (int q = 0; q < n; q++) {
                // Contract psi with conj(phi_p) on every p != q.
                Eigen::Vector2cd v = Eigen::Vector2cd::Zero();
                for (uint64_t idx = 0; idx < static_cast<uint64_t>(psi.size()); idx++) {
                    Complex c = psi[idx];
                    for (int p = 0; p < n && c != 0.0; p++) {
                        if (p != q) {
                            c *= std::conj(site[p][qubit_bit(idx, n, p)]);
                        }
                    }
                    v[qubit_bit(idx, n, q)] += c;
                }
                double norm = v.norm();
                value = norm * norm;
                if (norm > 0) {
                    site[q] = v / norm;
                }
            }
            if (value - before < 1e-15) {
                break;
            }
        }
        best = std::max(best, value);
    }
    return best;
}

double reduced_entropy(const DenseState &psi, int n, VertexSet a) {
    if (a.empty() || a.size() >= n || !a.is_subset_of(VertexSet::all(n))) {
        throw std::invalid_argument("reduced_entropy needs a proper nonempty subset");
    }
    auto inside = a.to_vector();
    auto outside = (VertexSet::all(n) - a).to_vector();
    Eigen::MatrixXcd m(Eigen::Index{1} << inside.size(), Eigen::Index{1} << outside.size());
    for (uint64_t idx = 0; idx < static_cast<uint64_t>(psi.size()); idx++) {
        uint64_t r = 0;
        uint64_t c = 0;
        for (int v : inside) {
            r = (r << 1) | qubit_bit(idx, n, v);
        }
        for (int v : outside) {
            c = (c << 1) | qubit_bit(idx, n, v);
        }
        m(r, c) = psi[idx];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m * m.adjoint(), Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index j = 0; j < eig.eigenvalues().size(); j++) {
        double p = eig.eigenvalues()[j];
        if (p > 1e-14) {
            s -= p * std::log2(p);
        }
    }
    return s;
}

double max_abs_diff(const DenseDensity &a, const DenseDensity &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace graphent::oracle
