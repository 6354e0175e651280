#ifndef GRAPHENT_STABILIZER_PAULI_H
#define GRAPHENT_STABILIZER_PAULI_H

#include <cstdint>
#include <string>
#include <string_view>

#include "graphent/graph/graph.h"

namespace graphent {

/// n-qubit Pauli operator i^phase * P_1 (x) ... (x) P_n.
///
/// Each qubit stores (x, z) bits with (1,1) meaning Y itself (not XZ), so a
/// Hermitian operator always has phase 0 or 2.
struct PauliOperator {
    int n = 0;
    uint64_t x = 0;
    uint64_t z = 0;
    int phase = 0;  // exponent of i, mod 4

    static PauliOperator identity(int n) { return PauliOperator{n, 0, 0, 0}; }

    /// Parses "XZI", "-IIZZXZ", "+iXY", "−ZZ" (unicode minus accepted).
    static PauliOperator from_string(std::string_view text);
    std::string to_string() const;

    bool is_hermitian() const { return phase % 2 == 0; }
    bool is_identity() const { return x == 0 && z == 0; }
    bool commutes_with(const PauliOperator &o) const;

    /// Letter on one qubit: 'I', 'X', 'Y' or 'Z'.
    char letter(int q) const;

    bool operator==(const PauliOperator &) const = default;
};

/// Operator product p * q with exact phase.
PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);

PauliOperator operator*(const PauliOperator &p, const PauliOperator &q);

}  // namespace graphent

#endif
