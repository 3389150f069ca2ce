#ifndef ACTIVITY_FORGE_TESTS_CORPUS_HPP
#define ACTIVITY_FORGE_TESTS_CORPUS_HPP

// Test graphs and oracles that do not share code paths with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "activity_forge/activity_forge.hpp"

namespace forge::testing {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

struct NamedGraph {
    std::string name;
    Multigraph graph;
};

inline Multigraph make(std::size_t n, const EdgeList& edges) { return Multigraph(n, edges); }

inline Multigraph k2() { return make(2, {{0, 1}}); }
inline Multigraph k3() { return make(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Multigraph p3() { return make(3, {{0, 1}, {1, 2}}); }
inline Multigraph loop1() { return make(1, {{0, 0}}); }
inline Multigraph star13() { return make(4, {{0, 1}, {0, 2}, {0, 3}}); }
inline Multigraph c4() { return make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
inline Multigraph two_k2() { return make(4, {{0, 1}, {2, 3}}); }
inline Multigraph edgeless(std::size_t n) { return make(n, {}); }
inline Multigraph k3_with_loop() { return make(3, {{0, 1}, {1, 2}, {0, 2}, {1, 1}}); }
inline Multigraph parallel_pair() { return make(2, {{0, 1}, {0, 1}}); }

inline Multigraph complete(std::size_t n) {
    EdgeList edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return make(n, edges);
}

inline Multigraph grid(std::size_t rows, std::size_t cols) {
    EdgeList edges;
    auto id = [&](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    }
    return make(rows * cols, edges);
}

// ---- oracles ----

/// k(V, A) by breadth-first search.
inline std::size_t bfs_components(const Multigraph& g, const EdgeSubset& a) {
    std::vector<std::vector<Vertex>> adj(g.vertex_count());
    for (EdgeId id : a.ids()) {
        const auto& e = g.edge(id);
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<bool> seen(g.vertex_count(), false);
    std::size_t count = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        ++count;
        std::queue<Vertex> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            auto v = q.front();
            q.pop();
            for (auto w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
            }
        }
    }
    return count;
}

inline bool bfs_is_spanning_forest(const Multigraph& g, const EdgeSubset& a) {
    const auto k = bfs_components(g, a);
    return a.size() + k == g.vertex_count() && k == bfs_components(g, g.full_set());
}

/// Spanning forests by filtering all 2^m subsets.
inline std::vector<EdgeSubset> brute_force_forests(const Multigraph& g) {
    std::vector<EdgeSubset> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
        auto a = EdgeSubset::from_mask(g.edge_count(), mask);
        if (bfs_is_spanning_forest(g, a)) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct LiteralActivity {
    EdgeSubset internal;
    EdgeSubset external;
};

/// Activities straight from the swap definitions: e in F is internally active
/// iff no larger f outside F makes F-e+f a spanning forest; f outside F is
/// externally active iff no larger e in F makes F-e+f a spanning forest.
inline LiteralActivity literal_activity(const Multigraph& g, const EdgeOrder& ord, const EdgeSubset& forest) {
    const auto m = g.edge_count();
    LiteralActivity out{EdgeSubset(m), EdgeSubset(m)};
    for (EdgeId e = 0; e < m; ++e) {
        if (!forest.contains(e)) continue;
        bool active = true;
        for (EdgeId f = 0; f < m; ++f) {
            if (forest.contains(f) || ord.rank(f) < ord.rank(e)) continue;
            auto swapped = forest;
            swapped.erase(e);
            swapped.insert(f);
            if (bfs_is_spanning_forest(g, swapped)) active = false;
        }
        if (active) out.internal.insert(e);
    }
    for (EdgeId f = 0; f < m; ++f) {
        if (forest.contains(f)) continue;
        bool active = true;
        for (EdgeId e = 0; e < m; ++e) {
            if (!forest.contains(e) || ord.rank(e) < ord.rank(f)) continue;
            auto swapped = forest;
            swapped.erase(e);
            swapped.insert(f);
            if (bfs_is_spanning_forest(g, swapped)) active = false;
        }
        if (active) out.external.insert(f);
    }
    return out;
}

/// Tutte polynomial by deletion-contraction on an edge list: loops give y,
/// bridges give x, other edges split into G-e and G/e.
inline SparsePoly deletion_contraction_tutte(std::size_t n, EdgeList edges) {
    const std::vector<std::string> vars{"x", "y"};
    if (edges.empty()) return SparsePoly::constant(1, vars);
    auto [u, v] = edges.back();
    edges.pop_back();
    if (u == v) return SparsePoly::monomial(vars, {0, 1}) * deletion_contraction_tutte(n, edges);
    // Bridge test: are u and v still connected without this edge?
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    std::function<Vertex(Vertex)> find = [&](Vertex x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto [a, b] : edges) parent[find(a)] = find(b);
    EdgeList contracted;
    for (auto [a, b] : edges) {
        auto ra = a == v ? u : a;
        auto rb = b == v ? u : b;
        contracted.emplace_back(ra, rb);
    }
    if (find(u) != find(v)) return SparsePoly::monomial(vars, {1, 0}) * deletion_contraction_tutte(n, contracted);
    return deletion_contraction_tutte(n, edges) + deletion_contraction_tutte(n, contracted);
}

inline SparsePoly deletion_contraction_tutte(const Multigraph& g) {
    EdgeList edges;
    for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
    return deletion_contraction_tutte(g.vertex_count(), edges);
}

// ---- corpus ----

/// Canonical form of a simple graph under vertex relabeling (smallest sorted edge list).
inline EdgeList canonical_simple(std::size_t n, const EdgeList& edges) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    EdgeList best;
    bool have = false;
    do {
        EdgeList mapped;
        for (auto [u, v] : edges) {
            auto a = perm[u];
            auto b = perm[v];
            mapped.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(mapped.begin(), mapped.end());
        if (!have || mapped < best) {
            best = mapped;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Every connected simple graph on 1..max_n vertices, one per isomorphism class.
inline std::vector<NamedGraph> connected_simple_graphs(std::size_t max_n) {
    std::vector<NamedGraph> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        EdgeList all;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
        std::set<EdgeList> seen;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
            EdgeList edges;
            for (std::size_t i = 0; i < all.size(); ++i)
                if ((mask >> i) & 1U) edges.push_back(all[i]);
            auto g = make(n, edges);
            if (component_count(g) != 1) continue;
            auto canon = canonical_simple(n, edges);
            if (!seen.insert(canon).second) continue;
            out.push_back({"simple n=" + std::to_string(n) + " mask=" + std::to_string(mask), make(n, canon)});
        }
    }
    return out;
}

/// Every multigraph (loops and parallel edges allowed) on 1..max_n vertices
/// with at most max_m edges, as edge multisets over the vertex labels.
inline std::vector<NamedGraph> small_multigraphs(std::size_t max_n, std::size_t max_m) {
    std::vector<NamedGraph> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        EdgeList kinds;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u; v < n; ++v) kinds.emplace_back(u, v);
        // Multisets of size <= max_m, as nondecreasing index sequences.
        std::vector<std::size_t> pick;
        std::function<void(std::size_t)> grow = [&](std::size_t from) {
            EdgeList edges;
            std::string label = "multi n=" + std::to_string(n) + " [";
            for (auto k : pick) {
                edges.push_back(kinds[k]);
                label += std::to_string(kinds[k].first) + std::to_string(kinds[k].second) + " ";
            }
            out.push_back({label + "]", make(n, edges)});
            if (pick.size() == max_m) return;
            for (std::size_t k = from; k < kinds.size(); ++k) {
                pick.push_back(k);
                grow(k);
                pick.pop_back();
            }
        };
        grow(0);
    }
    return out;
}

inline std::vector<NamedGraph> random_multigraphs(std::size_t count, std::size_t max_n, std::size_t max_m,
                                                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<NamedGraph> out;
    for (std::size_t i = 0; i < count; ++i) {
        const auto n = 1 + rng() % max_n;
        const auto m = rng() % (max_m + 1);
        EdgeList edges;
        for (std::size_t j = 0; j < m; ++j) {
            edges.emplace_back(static_cast<Vertex>(rng() % n), static_cast<Vertex>(rng() % n));
        }
        out.push_back({"random #" + std::to_string(i) + " n=" + std::to_string(n) + " m=" + std::to_string(m),
                       make(n, edges)});
    }
    return out;
}

/// The full acceptance corpus.
inline std::vector<NamedGraph> acceptance_corpus() {
    auto out = connected_simple_graphs(5);
    auto multi = small_multigraphs(3, 5);
    auto rnd = random_multigraphs(50, 6, 10, 20261019);
    out.insert(out.end(), multi.begin(), multi.end());
    out.insert(out.end(), rnd.begin(), rnd.end());
    return out;
}

/// The identity order followed by `extra` seeded random orders.
inline std::vector<EdgeOrder> test_orders(std::size_t m, std::size_t extra, std::uint64_t seed) {
    std::vector<EdgeOrder> out{EdgeOrder::identity(m)};
    for (std::size_t i = 0; i < extra; ++i) out.push_back(EdgeOrder::random(m, seed * 1000003 + i));
    return out;
}

}  // namespace forge::testing

#endif  // ACTIVITY_FORGE_TESTS_CORPUS_HPP
