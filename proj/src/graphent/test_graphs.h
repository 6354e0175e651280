#ifndef GRAPHENT_TEST_GRAPHS_H
#define GRAPHENT_TEST_GRAPHS_H

#include "graphent/graph/graph.h"

namespace graphent::testing {

// Six-vertex graph of the worked two-colourable example: leaves 1,2 on 6,
// leaves 3,4 on 5, and the edge 5-6.
inline Graph double_star_graph() { return Graph::from_edges(6, {{0, 5}, {1, 5}, {2, 4}, {3, 4}, {4, 5}}); }

// Seven-vertex graph whose maximum independent set {1,2,3,4} exceeds N/2.
inline Graph pendant_triangle_graph() {
    return Graph::from_edges(7, {{0, 6}, {1, 6}, {2, 5}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
}

}  // namespace graphent::testing

#endif
