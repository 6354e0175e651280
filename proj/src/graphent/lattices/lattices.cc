#include "graphent/lattices/lattices.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace graphent {

namespace {

using Point = std::pair<int, int>;

const Point kSteps[] = {{0, 1}, {0, -1}, {1, 0}, {-1, 0}, {1, 1}, {-1, -1}};

Graph induced(const std::set<Point> &points) {
    std::map<Point, Vertex> index;
    for (const Point &p : points) {
        index.emplace(p, static_cast<Vertex>(index.size()));
    }
    Graph g(static_cast<int>(points.size()));
    for (const auto &[p, v] : index) {
        for (auto [di, dj] : kSteps) {
            auto it = index.find({p.first + di, p.second + dj});
            if (it != index.end() && it->second > v) {
                g.add_edge(v, it->second);
            }
        }
    }
    return g;
}

int hex_distance(int i, int j) {
    if (static_cast<long long>(i) * j >= 0) {
        return std::max(std::abs(i), std::abs(j));
    }
    return std::abs(i) + std::abs(j);
}

Graph hexagonal(int m) {
    std::map<Point, Vertex> index;
    std::vector<std::pair<Point, Point>> edges;
    for (int i = 0; i < m; i++) {
        for (int k = 0; k < m; k++) {
            int c = 2 * k + i % 2;
            Point ring[6] = {{i, c}, {i, c + 1}, {i, c + 2}, {i + 1, c + 2}, {i + 1, c + 1}, {i + 1, c}};
            for (int t = 0; t < 6; t++) {
                index.emplace(ring[t], 0);
                edges.emplace_back(ring[t], ring[(t + 1) % 6]);
            }
        }
    }
    Vertex next = 0;
    for (auto &[p, v] : index) {
        v = next++;
    }
    Graph g(static_cast<int>(index.size()));
    for (auto [p, q] : edges) {
        Vertex a = index[p], b = index[q];
        if (!g.has_edge(a, b)) {
            g.add_edge(a, b);
        }
    }
    return g;
}

}  // namespace

std::string_view lattice_kind_name(LatticeKind kind) {
    switch (kind) {
        case LatticeKind::Triangular:
            return "triangular";
        case LatticeKind::Kagome:
            return "kagome";
        case LatticeKind::HexaTriangular:
            return "hexa-triangular";
        case LatticeKind::Hexagonal:
            return "hexagonal";
    }
    throw std::logic_error("unknown lattice kind");
}

LatticeKind parse_lattice_kind(std::string_view name) {
    for (LatticeKind k :
         {LatticeKind::Triangular, LatticeKind::Kagome, LatticeKind::HexaTriangular, LatticeKind::Hexagonal}) {
        if (name == lattice_kind_name(k)) {
            return k;
        }
    }
    if (name == "hexatriangular" || name == "hex-tri") {
        return LatticeKind::HexaTriangular;
    }
    throw std::invalid_argument("unknown lattice kind '" + std::string(name) + "'");
}

long long lattice_vertex_count(const LatticeSpec &spec) {
    if (spec.size < 1) {
        throw std::invalid_argument("lattice size must be at least 1");
    }
    long long m = spec.size;
    switch (spec.kind) {
        case LatticeKind::Triangular:
            return m * m;
        case LatticeKind::Kagome:
            return 3 * m * m + 3 * m - 1;
        case LatticeKind::HexaTriangular:
            return 3 * m * m + 3 * m + 1;
        case LatticeKind::Hexagonal:
            return 2 * m * m + 4 * m;
    }
    throw std::logic_error("unknown lattice kind");
}

Graph generate_lattice(const LatticeSpec &spec) {
    long long n = lattice_vertex_count(spec);
    if (n > kMaxVertices) {
        throw std::invalid_argument(std::string(lattice_kind_name(spec.kind)) + " lattice of size " +
                                    std::to_string(spec.size) + " has " + std::to_string(n) +
                                    " vertices (limit " + std::to_string(kMaxVertices) + ")");
    }
    int m = spec.size;
    std::set<Point> points;
    switch (spec.kind) {
        case LatticeKind::Triangular:
            for (int i = 0; i < m; i++) {
                for (int j = 0; j < m; j++) {
                    points.insert({i, j});
                }
            }
            break;
        case LatticeKind::Kagome:
            for (int r = 0; r < m; r++) {
                for (int c = 0; c < m; c++) {
                    int ci = 2 * r + 1, cj = 2 * c + 2;
                    points.insert({{ci - 1, cj - 1}, {ci - 1, cj}, {ci, cj}, {ci + 1, cj}, {ci + 1, cj + 1}});
                }
            }
            break;
        case LatticeKind::HexaTriangular:
            for (int i = -m; i <= m; i++) {
                for (int j = -m; j <= m; j++) {
                    if (hex_distance(i, j) <= m) {
                        points.insert({i, j});
                    }
                }
            }
            break;
        case LatticeKind::Hexagonal:
            return hexagonal(m);
    }
    return induced(points);
}

double gap_formula(LatticeKind kind, long long n) {
    if (n < 1) {
        throw std::invalid_argument("gap_formula: N must be positive");
    }
    double dn = static_cast<double>(n);
    double root = std::sqrt(dn);
    switch (kind) {
        case LatticeKind::Triangular: {
            long long side = std::llround(root);
            if (side * side != n) {
                throw std::invalid_argument("gap_formula: triangular N must be a perfect square");
            }
            if (side <= 3) {
                throw std::invalid_argument("gap_formula: triangular formula needs L > 3");
            }
            double sum = 0;
            for (long long j = 1; j <= (n - 1) / 3; j++) {
                sum += std::max(root - 3.0 * static_cast<double>(j), 0.0);
            }
            return static_cast<double>((n + 1) / 2) - root - 2 * sum;
        }
        case LatticeKind::Kagome:
            return (6 * dn - std::sqrt(13 + 3 * dn) - 11) / 9 - static_cast<double>(n / 2);
        case LatticeKind::HexaTriangular:
            return (12 * dn - 3 * std::sqrt(9 + 12 * dn) + 9) / 18 - static_cast<double>(n / 2);
        case LatticeKind::Hexagonal:
            return 0;
    }
    throw std::logic_error("unknown lattice kind");
}

int gap_exact(const Graph &g, const SolverLimits &limits) {
    int alpha = max_independent_set_size(g, limits);
    return g.num_vertices() - alpha - max_matching_size(g);
}

LatticeRow lattice_row(const LatticeSpec &spec, bool exact, const SolverLimits &limits) {
    LatticeRow row;
    row.spec = spec;
    row.n = lattice_vertex_count(spec);
    try {
        row.gap_formula = gap_formula(spec.kind, row.n);
    } catch (const std::invalid_argument &e) {
        row.note = e.what();
    }
    if (exact) {
        if (row.n > kMaxVertices) {
            row.note += (row.note.empty() ? "" : "; ") + std::string("too many vertices for exact analysis");
            return row;
        }
        Graph g = generate_lattice(spec);
        try {
            int alpha = max_independent_set_size(g, limits);
            row.vertex_cover = g.num_vertices() - alpha;
            row.matching = max_matching_size(g);
            row.gap_exact = *row.vertex_cover - *row.matching;
        } catch (const SolverTimeout &) {
            row.note += (row.note.empty() ? "" : "; ") + std::string("independent set search timed out");
        }
    }
    return row;
}

}  // namespace graphent
