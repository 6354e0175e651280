#ifndef GRAPHENT_LATTICES_LATTICES_H
#define GRAPHENT_LATTICES_LATTICES_H

#include <optional>
#include <string>
#include <string_view>

#include "graphent/graph/graph.h"
#include "graphent/graph/solvers.h"

namespace graphent {

// Open-boundary patches of four planar lattices, all drawn as induced
// subgraphs of the triangular lattice on integer points (i, j) whose
// neighbours are (i, j +- 1), (i +- 1, j) and (i + 1, j + 1), (i - 1, j - 1).
// Vertices are numbered row-major over (i, j).
//
//   triangular       size L: the L x L rhombus, N = L^2.
//   kagome           size m: an m x m block of bowties (two triangles sharing
//                    a corner) centred at (2r + 1, 2c + 2), N = 3m^2 + 3m - 1.
//   hexa-triangular  size m: the hexagonal patch of points within hex
//                    distance m of the origin, N = 3m^2 + 3m + 1.
//   hexagonal        size m: an m x m brick wall of hexagons, N = 2m^2 + 4m.

enum class LatticeKind : uint8_t { Triangular, Kagome, HexaTriangular, Hexagonal };

std::string_view lattice_kind_name(LatticeKind kind);
LatticeKind parse_lattice_kind(std::string_view name);

struct LatticeSpec {
    LatticeKind kind = LatticeKind::Triangular;
    int size = 1;
};

/// Vertex count of the generated patch; valid for any size >= 1.
long long lattice_vertex_count(const LatticeSpec &spec);

/// Throws std::invalid_argument for size < 1 or more than kMaxVertices
/// vertices.
Graph generate_lattice(const LatticeSpec &spec);

/// The closed-form gap as a function of N. The triangular sum runs over
/// j = 1..floor((N-1)/3) with each term max(sqrt(N) - 3j, 0); without the
/// clamp the later terms go negative and the expression grows like N^2.
/// Triangular needs N = L^2 with L > 3. Hexagonal is identically 0.
double gap_formula(LatticeKind kind, long long n);

/// |V \ alpha| - |M_max| for g itself. Throws SolverTimeout when the limits
/// are hit.
int gap_exact(const Graph &g, const SolverLimits &limits = {});

struct LatticeRow {
    LatticeSpec spec;
    long long n = 0;
    std::optional<int> matching;
    std::optional<int> vertex_cover;
    std::optional<int> gap_exact;
    std::optional<double> gap_formula;
    std::string note;
};

/// One line of a lattice scan. Exact columns are filled when `exact` is set
/// and the patch fits; a missing formula or a solver timeout is explained in
/// `note`.
LatticeRow lattice_row(const LatticeSpec &spec, bool exact, const SolverLimits &limits = {});

}  // namespace graphent

#endif
