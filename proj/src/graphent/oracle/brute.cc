#include "graphent/oracle/brute.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace graphent::oracle {

namespace {

bool lex_less(VertexSet a, VertexSet b) { return a.to_vector() < b.to_vector(); }

}  // namespace

BruteMis brute_mis(const Graph &g) {
    int n = g.num_vertices();
    if (n > 16) {
        throw std::invalid_argument("brute_mis supports n <= 16");
    }
    BruteMis out;
    for (uint64_t s = 0; s < (uint64_t{1} << n); s++) {
        bool independent = true;
        for (int v = 0; v < n && independent; v++) {
            if (((s >> v) & 1) && (g.rows()[v] & s)) {
                independent = false;
            }
        }
        if (!independent) {
            continue;
        }
        int size = popcount(s);
        if (size > out.size) {
            out.size = size;
            out.all.clear();
        }
        if (size == out.size) {
            out.all.push_back(VertexSet(s));
        }
    }
    std::sort(out.all.begin(), out.all.end(), lex_less);
    return out;
}

int brute_matching(const Graph &g) {
    if (g.num_vertices() > 12) {
        throw std::invalid_argument("brute_matching supports n <= 12");
    }
    auto edges = g.edges();
    int best = 0;
    // Depth-first over edge subsets, skipping conflicting choices.
    auto rec = [&](auto &self, std::size_t i, uint64_t used, int size) -> void {
        best = std::max(best, size);
        for (std::size_t j = i; j < edges.size(); j++) {
            auto [a, b] = edges[j];
            uint64_t both = (uint64_t{1} << a) | (uint64_t{1} << b);
            if (!(used & both)) {
                self(self, j + 1, used | both, size + 1);
            }
        }
    };
    rec(rec, 0, 0, 0);
    return best;
}

BruteOrbit brute_orbit(const Graph &g) {
    if (g.num_vertices() > 8) {
        throw std::invalid_argument("brute_orbit supports n <= 8");
    }
    std::set<Graph> seen{g};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Graph> snapshot(seen.begin(), seen.end());
        for (const Graph &m : snapshot) {
            for (Vertex a = 0; a < g.num_vertices(); a++) {
                Graph next = m;
                auto nb = m.neighbors(a).to_vector();
                for (std::size_t i = 0; i < nb.size(); i++) {
                    for (std::size_t j = i + 1; j < nb.size(); j++) {
                        next.toggle_edge(nb[i], nb[j]);
                    }
                }
                grew |= seen.insert(next).second;
            }
        }
    }
    BruteOrbit out;
    out.members.assign(seen.begin(), seen.end());
    out.min_matching = g.num_vertices();
    out.min_vertex_cover = g.num_vertices();
    for (const Graph &m : out.members) {
        out.min_matching = std::min(out.min_matching, brute_matching(m));
        out.min_vertex_cover = std::min(out.min_vertex_cover, m.num_vertices() - brute_mis(m).size);
    }
    return out;
}

std::vector<Graph> all_connected_graphs(int n) {
    if (n < 1 || n > 6) {
        throw std::invalid_argument("all_connected_graphs supports 1 <= n <= 6");
    }
    std::vector<Edge> pairs;
    for (Vertex a = 0; a < n; a++) {
        for (Vertex b = a + 1; b < n; b++) {
            pairs.emplace_back(a, b);
        }
    }
    std::vector<Graph> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << pairs.size()); mask++) {
        Graph g(n);
        for (std::size_t i = 0; i < pairs.size(); i++) {
            if ((mask >> i) & 1) {
                g.add_edge(pairs[i].first, pairs[i].second);
            }
        }
        if (g.is_connected()) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace graphent::oracle
