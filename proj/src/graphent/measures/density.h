#ifndef GRAPHENT_MEASURES_DENSITY_H
#define GRAPHENT_MEASURES_DENSITY_H

#include <Eigen/Dense>
#include <vector>

#include "graphent/stabilizer/pauli.h"
#include "graphent/stabilizer/product_state.h"

namespace graphent {

// Dense forms of the certificates, for small n. Index convention: qubit 1 is
// the most significant bit.

constexpr int kMaxDensityQubits = 10;

using DensityMatrix = Eigen::MatrixXcd;

Eigen::VectorXcd product_vector(const ProductStabilizerState &psi);

/// sum_j weight |c_j><c_j|.
DensityMatrix mixture_density(const std::vector<ProductStabilizerState> &components, double weight);

/// scale * sum of the given Pauli operators.
DensityMatrix pauli_sum_density(const std::vector<PauliOperator> &elements, double scale);

}  // namespace graphent

#endif
