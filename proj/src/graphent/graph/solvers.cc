#include "graphent/graph/solvers.h"

#include <algorithm>
#include <deque>
#include <numeric>

namespace graphent {

VertexSet Matching::covered() const {
    VertexSet s;
    for (auto [a, b] : edges) {
        s.insert(a);
        s.insert(b);
    }
    return s;
}

namespace {

// Branch and bound over bit-vector candidate sets. Vertices of degree <= 1
// inside the candidate set are taken greedily (some maximum set contains
// them); otherwise the search branches on a maximum-degree vertex and prunes
// with a greedy clique cover.
class IndependentSetSearch {
   public:
    IndependentSetSearch(const Graph &g, const SolverLimits &limits) : g_(g), limits_(limits) {
        start_ = std::chrono::steady_clock::now();
    }

    // Largest independent set size within r, or at least `target` if one of
    // that size exists and target > 0 (the search stops at the first hit).
    int run(uint64_t r, int lower_bound, int target) {
        best_ = lower_bound;
        target_ = target;
        done_ = false;
        search(r, 0);
        return best_;
    }

   private:
    uint64_t closed(int v) const { return g_.rows()[v] | (uint64_t{1} << v); }

    int clique_cover(uint64_t r) const {
        int cliques = 0;
        while (r) {
            uint64_t clique_candidates = r;
            uint64_t taken = 0;
            while (clique_candidates) {
                int v = lowest_bit(clique_candidates);
                taken |= uint64_t{1} << v;
                clique_candidates &= g_.rows()[v];
            }
            r &= ~taken;
            cliques++;
        }
        return cliques;
    }

    void tick() {
        nodes_++;
        if (limits_.max_nodes && nodes_ > limits_.max_nodes) {
            throw SolverTimeout("independent-set search exceeded its node budget");
        }
        if (limits_.deadline.count() > 0 && (nodes_ & 1023) == 0 &&
            std::chrono::steady_clock::now() - start_ > limits_.deadline) {
            throw SolverTimeout("independent-set search exceeded its time limit");
        }
    }

    void search(uint64_t r, int cur) {
        if (done_) {
            return;
        }
        tick();
        bool reduced = true;
        while (r && reduced) {
            reduced = false;
            for (uint64_t rest = r; rest; rest &= rest - 1) {
                int v = lowest_bit(rest);
                if (popcount(g_.rows()[v] & r) <= 1) {
                    cur++;
                    r &= ~closed(v);
                    reduced = true;
                    break;
                }
            }
        }
        if (r == 0) {
            if (cur > best_) {
                best_ = cur;
                if (target_ > 0 && best_ >= target_) {
                    done_ = true;
                }
            }
            return;
        }
        if (cur + clique_cover(r) <= best_) {
            return;
        }
        int pick = -1;
        int pick_deg = -1;
        for_each_bit(r, [&](int v) {
            int d = popcount(g_.rows()[v] & r);
            if (d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        });
        search(r & ~closed(pick), cur + 1);
        search(r & ~(uint64_t{1} << pick), cur);
    }

    const Graph &g_;
    SolverLimits limits_;
    std::chrono::steady_clock::time_point start_;
    uint64_t nodes_ = 0;
    int best_ = 0;
    int target_ = 0;
    bool done_ = false;
};

int greedy_independent_size(const Graph &g, uint64_t r) {
    int size = 0;
    while (r) {
        int pick = -1;
        int pick_deg = 65;
        for_each_bit(r, [&](int v) {
            int d = popcount(g.rows()[v] & r);
            if (d < pick_deg) {
                pick = v;
                pick_deg = d;
            }
        });
        size++;
        r &= ~(g.rows()[pick] | (uint64_t{1} << pick));
    }
    return size;
}

}  // namespace

int max_independent_set_size(const Graph &g, VertexSet within, const SolverLimits &limits) {
    uint64_t r = within.bits() & g.vertices().bits();
    IndependentSetSearch search(g, limits);
    return search.run(r, greedy_independent_size(g, r), 0);
}

int max_independent_set_size(const Graph &g, const SolverLimits &limits) {
    return max_independent_set_size(g, g.vertices(), limits);
}

VertexSet max_independent_set(const Graph &g, const SolverLimits &limits) {
    int alpha = max_independent_set_size(g, limits);
    IndependentSetSearch search(g, limits);
    VertexSet chosen;
    uint64_t r = g.vertices().bits();
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        if (!((r >> v) & 1)) {
            continue;
        }
        uint64_t rest = r & ~(g.rows()[v] | (uint64_t{1} << v));
        int need = alpha - chosen.size() - 1;
        bool fits = need <= 0 || search.run(rest, need - 1, need) >= need;
        if (fits) {
            chosen.insert(v);
            r = rest;
        } else {
            r &= ~(uint64_t{1} << v);
        }
        if (chosen.size() == alpha) {
            break;
        }
    }
    return chosen;
}

VertexSet min_vertex_cover(const Graph &g, const SolverLimits &limits) {
    return g.vertices() - max_independent_set(g, limits);
}

namespace {

// Edmonds' blossom algorithm on the subgraph with edge rows `adj`.
class Blossom {
   public:
    explicit Blossom(std::vector<uint64_t> adj) : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())) {
        match_.assign(n_, -1);
    }

    int solve() {
        int size = 0;
        // Greedy warm start.
        for (int v = 0; v < n_; v++) {
            if (match_[v] != -1) {
                continue;
            }
            for (uint64_t rest = adj_[v]; rest; rest &= rest - 1) {
                int u = lowest_bit(rest);
                if (match_[u] == -1) {
                    match_[u] = v;
                    match_[v] = u;
                    size++;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; v++) {
            if (match_[v] == -1 && augment_from(v)) {
                size++;
            }
        }
        return size;
    }

    const std::vector<int> &mate() const { return match_; }

   private:
    int lca(int a, int b) {
        std::vector<bool> seen(n_, false);
        while (true) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] == -1) {
                break;
            }
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b]) {
                return b;
            }
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    bool augment_from(int root) {
        used_.assign(n_, false);
        parent_.assign(n_, -1);
        base_.resize(n_);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = true;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (uint64_t rest = adj_[v]; rest; rest &= rest - 1) {
                int to = lowest_bit(rest);
                if (base_[v] == base_[to] || match_[v] == to) {
                    continue;
                }
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    int cur = lca(v, to);
                    blossom_.assign(n_, false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; i++) {
                        if (blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) {
                        for (int u = to; u != -1;) {
                            int pv = parent_[u];
                            int ppv = match_[pv];
                            match_[u] = pv;
                            match_[pv] = u;
                            u = ppv;
                        }
                        return true;
                    }
                    used_[match_[to]] = true;
                    queue.push_back(match_[to]);
                }
            }
        }
        return false;
    }

    std::vector<uint64_t> adj_;
    int n_;
    std::vector<int> match_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<bool> used_;
    std::vector<bool> blossom_;
};

int matching_size_of(const std::vector<uint64_t> &adj) { return Blossom(adj).solve(); }

// Rows containing only the edges listed in edges[from..] between vertices
// outside `blocked`.
std::vector<uint64_t> suffix_rows(int n, const std::vector<Edge> &edges, std::size_t from, uint64_t blocked) {
    std::vector<uint64_t> rows(n, 0);
    for (std::size_t i = from; i < edges.size(); i++) {
        auto [a, b] = edges[i];
        if (((blocked >> a) & 1) || ((blocked >> b) & 1)) {
            continue;
        }
        rows[a] |= uint64_t{1} << b;
        rows[b] |= uint64_t{1} << a;
    }
    return rows;
}

void enumerate_matchings(int n, const std::vector<Edge> &edges, std::size_t from, uint64_t blocked,
                         int remaining, std::vector<Edge> &prefix, std::vector<Matching> &out,
                         std::size_t limit) {
    if (out.size() >= limit) {
        return;
    }
    if (remaining == 0) {
        out.push_back(Matching{prefix});
        return;
    }
    for (std::size_t i = from; i < edges.size() && out.size() < limit; i++) {
        auto [a, b] = edges[i];
        if (((blocked >> a) & 1) || ((blocked >> b) & 1)) {
            continue;
        }
        uint64_t next_blocked = blocked | (uint64_t{1} << a) | (uint64_t{1} << b);
        if (remaining > 1 && matching_size_of(suffix_rows(n, edges, i + 1, next_blocked)) < remaining - 1) {
            continue;
        }
        prefix.push_back(edges[i]);
        enumerate_matchings(n, edges, i + 1, next_blocked, remaining - 1, prefix, out, limit);
        prefix.pop_back();
    }
}

}  // namespace

int max_matching_size(const Graph &g) {
    return matching_size_of(std::vector<uint64_t>(g.rows().begin(), g.rows().end()));
}

std::vector<Matching> max_matchings(const Graph &g, std::size_t limit) {
    std::vector<Matching> out;
    std::vector<Edge> prefix;
    int nu = max_matching_size(g);
    enumerate_matchings(g.num_vertices(), g.edges(), 0, 0, nu, prefix, out, limit);
    return out;
}

Matching max_matching(const Graph &g) {
    auto all = max_matchings(g, 1);
    return all.empty() ? Matching{} : all.front();
}

std::optional<std::pair<VertexSet, VertexSet>> is_bipartite(const Graph &g) {
    int n = g.num_vertices();
    std::vector<int> colour(n, -1);
    VertexSet first;
    VertexSet second;
    for (Vertex s = 0; s < n; s++) {
        if (colour[s] != -1) {
            continue;
        }
        colour[s] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            (colour[v] == 0 ? first : second).insert(v);
            for (Vertex u : g.neighbors(v)) {
                if (colour[u] == -1) {
                    colour[u] = 1 - colour[v];
                    queue.push_back(u);
                } else if (colour[u] == colour[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return std::make_pair(first, second);
}

int gf2_rank(std::vector<uint64_t> rows, uint64_t columns) {
    int rank = 0;
    for (auto &r : rows) {
        r &= columns;
    }
    for (std::size_t i = 0; i < rows.size(); i++) {
        if (rows[i] == 0) {
            continue;
        }
        uint64_t pivot = rows[i] & -rows[i];
        rank++;
        for (std::size_t j = i + 1; j < rows.size(); j++) {
            if (rows[j] & pivot) {
                rows[j] ^= rows[i];
            }
        }
    }
    return rank;
}

int cut_rank(const Graph &g, VertexSet a) {
    VertexSet all = g.vertices();
    if (a.empty() || !a.is_subset_of(all) || a == all) {
        throw std::invalid_argument("cut_rank needs a proper nonempty vertex subset");
    }
    std::vector<uint64_t> rows;
    for (Vertex v : a) {
        rows.push_back(g.rows()[v]);
    }
    return gf2_rank(std::move(rows), (all - a).bits());
}

int max_cut_rank(const Graph &g) {
    int n = g.num_vertices();
    if (n > kMaxExactCutRankVertices) {
        throw std::invalid_argument("max_cut_rank: too many vertices for exhaustive cuts");
    }
    int best = 0;
    // Vertex n-1 stays on the complement side; every cut appears once.
    for (uint64_t a = 1; n > 1 && a < (uint64_t{1} << (n - 1)); a++) {
        best = std::max(best, cut_rank(g, VertexSet(a)));
    }
    return best;
}

}  // namespace graphent
