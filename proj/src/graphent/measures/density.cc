#include "graphent/measures/density.h"

#include <cmath>
#include <stdexcept>

namespace graphent {

namespace {

void check_size(int n) {
    if (n > kMaxDensityQubits) {
        throw std::invalid_argument("dense form requested for " + std::to_string(n) + " qubits (limit " +
                                    std::to_string(kMaxDensityQubits) + ")");
    }
}

}  // namespace

Eigen::VectorXcd product_vector(const ProductStabilizerState &psi) {
    int n = psi.num_qubits();
    check_size(n);
    const double r = std::sqrt(0.5);
    const std::complex<double> i1(0, 1);
    Eigen::VectorXcd v(Eigen::Index{1} << n);
    for (Eigen::Index idx = 0; idx < v.size(); idx++) {
        std::complex<double> amp = 1.0;
        for (int q = 0; q < n && amp != 0.0; q++) {
            bool one = (idx >> (n - 1 - q)) & 1;
            switch (psi.qubits[q]) {
                case SingleQubitState::ZPlus:
                    amp *= one ? 0.0 : 1.0;
                    break;
                case SingleQubitState::ZMinus:
                    amp *= one ? 1.0 : 0.0;
                    break;
                case SingleQubitState::XPlus:
                    amp *= r;
                    break;
                case SingleQubitState::XMinus:
                    amp *= one ? -r : r;
                    break;
                case SingleQubitState::YPlus:
                    amp *= one ? i1 * r : std::complex<double>(r);
                    break;
                case SingleQubitState::YMinus:
                    amp *= one ? -i1 * r : std::complex<double>(r);
                    break;
            }
        }
        v[idx] = amp;
    }
    return v;
}

DensityMatrix mixture_density(const std::vector<ProductStabilizerState> &components, double weight) {
    if (components.empty()) {
        throw std::invalid_argument("mixture_density: no components");
    }
    int n = components.front().num_qubits();
    check_size(n);
    DensityMatrix rho = DensityMatrix::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
    for (const auto &c : components) {
        Eigen::VectorXcd v = product_vector(c);
        rho.noalias() += weight * v * v.adjoint();
    }
    return rho;
}

DensityMatrix pauli_sum_density(const std::vector<PauliOperator> &elements, double scale) {
    if (elements.empty()) {
        throw std::invalid_argument("pauli_sum_density: no elements");
    }
    int n = elements.front().n;
    check_size(n);
    Eigen::Index dim = Eigen::Index{1} << n;
    DensityMatrix rho = DensityMatrix::Zero(dim, dim);
    static const std::complex<double> phases[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (const auto &p : elements) {
        // Index bit of qubit q is n-1-q; reverse the masks into index order.
        uint64_t xm = 0;
        uint64_t zm = 0;
        uint64_t ym = 0;
        for (int q = 0; q < n; q++) {
            uint64_t bit = uint64_t{1} << (n - 1 - q);
            bool x = (p.x >> q) & 1;
            bool z = (p.z >> q) & 1;
            if (x) {
                xm |= bit;
            }
            if (z) {
                zm |= bit;
            }
            if (x && z) {
                ym |= bit;
            }
        }
        // P|c> with P = i^phase prod sigma_q. Per qubit, Z gives (-1)^c,
        // X flips, Y = iXZ gives i (-1)^c and flips.
        int ycount = popcount(ym);
        for (uint64_t c = 0; c < static_cast<uint64_t>(dim); c++) {
            int ph = p.phase + ycount + 2 * popcount(c & zm);
            rho(static_cast<Eigen::Index>(c ^ xm), static_cast<Eigen::Index>(c)) += scale * phases[ph & 3];
        }
    }
    return rho;
}

}  // namespace graphent
