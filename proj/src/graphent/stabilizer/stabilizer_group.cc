#include "graphent/stabilizer/stabilizer_group.h"

#include <stdexcept>

namespace graphent {

std::vector<PauliOperator> StabilizerGroup::elements() const {
    if (generators.size() > 24) {
        throw std::invalid_argument("refusing to expand a stabilizer group with more than 2^24 elements");
    }
    std::vector<PauliOperator> out(order());
    out[0] = PauliOperator::identity(n);
    // Element m extends element m without its highest bit, so products are
    // always accumulated in increasing generator order.
    for (std::size_t m = 1; m < out.size(); m++) {
        int top = 63 - std::countl_zero(static_cast<uint64_t>(m));
        out[m] = out[m & ~(std::size_t{1} << top)] * generators[top];
    }
    return out;
}

StabilizerGroup generators_from_graph(const Graph &g) {
    StabilizerGroup s;
    s.n = g.num_vertices();
    s.support = g.vertices();
    for (Vertex v = 0; v < s.n; v++) {
        s.generators.push_back(PauliOperator{s.n, uint64_t{1} << v, g.neighbors(v).bits(), 0});
    }
    return s;
}

StabilizerGroup restricted_subgroup(const StabilizerGroup &s, VertexSet keep) {
    StabilizerGroup out;
    out.n = s.n;
    int j = 0;
    for (Vertex v : s.support) {
        if (keep.contains(v)) {
            out.generators.push_back(s.generators[j]);
            out.support.insert(v);
        }
        j++;
    }
    return out;
}

bool entangles_check(const StabilizerGroup &s) {
    for (std::size_t a = 0; a < s.generators.size(); a++) {
        for (std::size_t b = 0; b < s.generators.size(); b++) {
            if (a != b && (s.generators[b].z & s.generators[a].x)) {
                return true;
            }
        }
    }
    return false;
}

bool is_valid_stabilizer(const StabilizerGroup &s) {
    for (std::size_t a = 0; a < s.generators.size(); a++) {
        for (std::size_t b = a + 1; b < s.generators.size(); b++) {
            if (!s.generators[a].commutes_with(s.generators[b])) {
                return false;
            }
        }
    }
    // Independence: eliminate over the 2n-bit rows (x | z).
    std::vector<std::pair<uint64_t, uint64_t>> rows;
    for (const auto &p : s.generators) {
        rows.emplace_back(p.x, p.z);
    }
    for (std::size_t i = 0; i < rows.size(); i++) {
        auto [x, z] = rows[i];
        if (x == 0 && z == 0) {
            return false;
        }
        bool in_x = x != 0;
        uint64_t pivot = in_x ? (x & -x) : (z & -z);
        for (std::size_t j = i + 1; j < rows.size(); j++) {
            if ((in_x ? rows[j].first : rows[j].second) & pivot) {
                rows[j].first ^= x;
                rows[j].second ^= z;
            }
        }
    }
    return true;
}

}  // namespace graphent
