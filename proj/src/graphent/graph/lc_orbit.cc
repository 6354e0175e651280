#include "graphent/graph/lc_orbit.h"

#include <algorithm>
#include <tuple>
#include <unordered_map>

#include "graphent/graph/solvers.h"
#include "graphent/util/parallel.h"

namespace graphent {

std::vector<Vertex> LcOrbit::path_to(std::size_t i) const {
    std::vector<Vertex> path;
    for (int at = static_cast<int>(i); parent.at(at) != -1; at = parent[at]) {
        path.push_back(via[at]);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

LcOrbit enumerate_lc_orbit(const Graph &g, std::size_t cap) {
    LcOrbit orbit;
    std::unordered_map<Graph, int, GraphHash> index;
    orbit.members.push_back(g);
    orbit.parent.push_back(-1);
    orbit.via.push_back(-1);
    index.emplace(g, 0);
    for (std::size_t head = 0; head < orbit.members.size(); head++) {
        for (Vertex a = 0; a < g.num_vertices(); a++) {
            // Complementing at a vertex of degree < 2 is the identity.
            if (orbit.members[head].degree(a) < 2) {
                continue;
            }
            Graph next = local_complement(orbit.members[head], a);
            if (index.contains(next)) {
                continue;
            }
            if (orbit.members.size() >= cap) {
                orbit.truncated = true;
                return orbit;
            }
            index.emplace(next, static_cast<int>(orbit.members.size()));
            orbit.members.push_back(std::move(next));
            orbit.parent.push_back(static_cast<int>(head));
            orbit.via.push_back(a);
        }
    }
    return orbit;
}

OrbitSummary lc_orbit(const Graph &g, std::size_t cap) {
    LcOrbit orbit = enumerate_lc_orbit(g, cap);
    std::size_t count = orbit.members.size();
    std::vector<int> cover(count);
    std::vector<int> matching(count);
    parallel_for(count, [&](std::size_t i) {
        const Graph &m = orbit.members[i];
        cover[i] = m.num_vertices() - max_independent_set_size(m);
        matching[i] = max_matching_size(m);
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < count; i++) {
        auto key = [&](std::size_t j) { return std::tie(cover[j], matching[j], orbit.members[j]); };
        if (key(i) < key(best)) {
            best = i;
        }
    }

    OrbitSummary out;
    out.size = count;
    out.representative = orbit.members[best];
    out.min_vertex_cover = *std::min_element(cover.begin(), cover.end());
    out.min_matching = *std::min_element(matching.begin(), matching.end());
    out.truncated = orbit.truncated;
    out.path = orbit.path_to(best);
    out.input_vertex_cover = cover[0];
    out.input_matching = matching[0];
    out.representative_vertex_cover = cover[best];
    out.representative_matching = matching[best];
    return out;
}

}  // namespace graphent
