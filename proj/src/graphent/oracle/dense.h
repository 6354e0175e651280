#ifndef GRAPHENT_ORACLE_DENSE_H
#define GRAPHENT_ORACLE_DENSE_H

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>

#include "graphent/graph/graph.h"
#include "graphent/stabilizer/pauli.h"
#include "graphent/stabilizer/product_state.h"

namespace graphent::oracle {

// Dense ground truth. Basis index bits run with qubit 1 as the most
// significant bit, so |q_1 q_2 ... q_n> has index sum q_j 2^(n-j).

using Complex = std::complex<double>;
using DenseState = Eigen::VectorXcd;
using DenseDensity = Eigen::MatrixXcd;

constexpr int kMaxStatevectorQubits = 14;
constexpr int kMaxDenseQubits = 10;

/// prod CZ |+>^n. Amplitude of |z> is 2^(-n/2) (-1)^(sum over edges z_i z_j).
DenseState statevector(const Graph &g);

/// Z^k |G>, with k the set of vertices carrying a 1.
DenseState graph_basis_state(const Graph &g, VertexSet k);

/// Full 2^n x 2^n matrix of p including its phase.
DenseDensity pauli_dense(const PauliOperator &p);

Eigen::Vector2cd single_qubit_vector(SingleQubitState s);
DenseState product_state_vector(const ProductStabilizerState &psi);

/// Applies a 2x2 matrix to qubit q of a state.
DenseState apply_single_qubit(const DenseState &psi, int n, int q, const Eigen::Matrix2cd &u);

/// (I - iX)/sqrt(2) and (I + iZ)/sqrt(2).
Eigen::Matrix2cd sqrt_minus_i_x_matrix();
Eigen::Matrix2cd sqrt_i_z_matrix();

DenseDensity projector(const DenseState &psi);

struct RelativeEntropy {
    double bits = 0.0;  // +infinity on a support violation
    std::string diagnostic;
};

/// S(|psi><psi| || omega) = -<psi| log2(omega) |psi>. Eigenvalues of omega
/// below 1e-14 count as zero; weight of psi there makes the result infinite.
RelativeEntropy relative_entropy_pure(const DenseState &psi, const DenseDensity &omega);

/// |<phi|psi>|^2.
double overlap2(const DenseState &psi, const ProductStabilizerState &phi);

/// Largest |<phi|psi>|^2 found over product states phi by alternating
/// single-qubit updates from random starts. A heuristic lower bound on the
/// true maximum; n <= 8.
double best_product_overlap(const DenseState &psi, int n, int restarts, int iterations, uint64_t seed);

/// Von Neumann entropy in bits of the reduced state on a.
double reduced_entropy(const DenseState &psi, int n, VertexSet a);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const DenseDensity &a, const DenseDensity &b);

int qubit_count(const DenseState &psi);

}  // namespace graphent::oracle

#endif
