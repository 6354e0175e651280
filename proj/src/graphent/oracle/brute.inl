#include <random>

namespace graphent::oracle {

template <typename Rng>
Graph random_connected_graph(int n, double p, Rng &rng) {
    std::bernoulli_distribution coin(p);
    while (true) {
        Graph g(n);
        for (Vertex a = 0; a < n; a++) {
            for (Vertex b = a + 1; b < n; b++) {
                if (coin(rng)) {
                    g.add_edge(a, b);
                }
            }
        }
        if (g.is_connected()) {
            return g;
        }
    }
}

}  // namespace graphent::oracle
