#include "graphent/stabilizer/pauli.h"

#include <stdexcept>

namespace graphent {

PauliOperator PauliOperator::from_string(std::string_view text) {
    PauliOperator p;
    // Leading sign: '+', '-', U+2212, optionally followed by 'i'.
    if (text.starts_with("+")) {
        text.remove_prefix(1);
    } else if (text.starts_with("-")) {
        p.phase = 2;
        text.remove_prefix(1);
    } else if (text.starts_with("\xE2\x88\x92")) {
        p.phase = 2;
        text.remove_prefix(3);
    }
    if (text.starts_with("i")) {
        p.phase = (p.phase + 1) % 4;
        text.remove_prefix(1);
    }
    if (text.size() > static_cast<size_t>(kMaxVertices)) {
        throw std::invalid_argument("Pauli string longer than 64 qubits");
    }
    p.n = static_cast<int>(text.size());
    for (int q = 0; q < p.n; q++) {
        uint64_t bit = uint64_t{1} << q;
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.x |= bit;
                break;
            case 'Z':
                p.z |= bit;
                break;
            case 'Y':
                p.x |= bit;
                p.z |= bit;
                break;
            default:
                throw std::invalid_argument("invalid Pauli character in '" + std::string(text) + "'");
        }
    }
    return p;
}

char PauliOperator::letter(int q) const {
    static constexpr char letters[] = {'I', 'X', 'Z', 'Y'};
    return letters[((x >> q) & 1) | (((z >> q) & 1) << 1)];
}

std::string PauliOperator::to_string() const {
    static constexpr const char *prefix[] = {"", "i", "-", "-i"};
    std::string out = prefix[phase & 3];
    for (int q = 0; q < n; q++) {
        out.push_back(letter(q));
    }
    return out;
}

bool PauliOperator::commutes_with(const PauliOperator &o) const {
    return !parity((x & o.z) ^ (z & o.x));
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    if (p.n != q.n) {
        throw std::invalid_argument("Pauli length mismatch: " + std::to_string(p.n) + " vs " +
                                    std::to_string(q.n));
    }
    PauliOperator r;
    r.n = p.n;
    r.x = p.x ^ q.x;
    r.z = p.z ^ q.z;
    // Expand Y = iXZ on both sides, commute Z^{z1} past X^{x2}, and fold the
    // overlapping XZ of the result back into Y.
    int ph = p.phase + popcount(p.x & p.z) + q.phase + popcount(q.x & q.z) + 2 * popcount(p.z & q.x) -
             popcount(r.x & r.z);
    r.phase = ((ph % 4) + 4) % 4;
    return r;
}

PauliOperator operator*(const PauliOperator &p, const PauliOperator &q) { return multiply(p, q); }

}  // namespace graphent
