#ifndef GRAPHENT_GRAPH_GRAPH_IO_H
#define GRAPHENT_GRAPH_GRAPH_IO_H

#include <stdexcept>
#include <string>
#include <string_view>

#include "graphent/graph/graph.h"

namespace graphent {

enum class GraphFormat { EdgeList, Graph6 };

struct GraphParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// "N M" header then M lines "u v" with one-based vertices. Text after '#'
/// on any line is ignored, as are blank lines.
Graph parse_edge_list(std::string_view text);

/// Standard graph6 (optional ">>graph6<<" header, N < 63 in the short form
/// plus the 4-byte form up to 64).
Graph parse_graph6(std::string_view text);

/// Parses either format. Analysis entry points pass require_connected=true.
Graph parse_graph(std::string_view text, GraphFormat format, bool require_connected = true);

GraphFormat parse_format_name(std::string_view name);

std::string write_edge_list(const Graph &g);
std::string write_graph6(const Graph &g);

}  // namespace graphent

#endif
