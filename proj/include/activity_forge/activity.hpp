#ifndef ACTIVITY_FORGE_ACTIVITY_HPP
#define ACTIVITY_FORGE_ACTIVITY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "activity_forge/errors.hpp"
#include "activity_forge/graph.hpp"

namespace forge {

/// Strict total order on edge ids, stored as ranks 1..m.
class EdgeOrder {
public:
    EdgeOrder() = default;

    /// rank(e) = e + 1, the order edges were listed in.
    static EdgeOrder identity(std::size_t m) {
        std::vector<EdgeId> seq(m);
        for (std::size_t i = 0; i < m; ++i) seq[i] = static_cast<EdgeId>(i);
        return from_sequence(seq);
    }

    /// `ascending[0]` is the smallest edge, `ascending[m-1]` the largest.
    static EdgeOrder from_sequence(std::span<const EdgeId> ascending) {
        EdgeOrder ord;
        const auto m = ascending.size();
        ord.ranks_.assign(m, 0);
        ord.sequence_.assign(ascending.begin(), ascending.end());
        for (std::size_t pos = 0; pos < m; ++pos) {
            auto id = ascending[pos];
            if (id >= m) throw InvalidOrder("order entry " + std::to_string(id) + " out of range");
            if (ord.ranks_[id] != 0) throw InvalidOrder("edge " + std::to_string(id) + " listed twice in order");
            ord.ranks_[id] = static_cast<std::uint32_t>(pos + 1);
        }
        return ord;
    }

    /// `ranks[e]` in 1..m, all distinct.
    static EdgeOrder from_ranks(std::span<const std::uint32_t> ranks) {
        const auto m = ranks.size();
        std::vector<EdgeId> seq(m, 0);
        std::vector<bool> seen(m, false);
        for (std::size_t e = 0; e < m; ++e) {
            auto r = ranks[e];
            if (r == 0 || r > m || seen[r - 1]) {
                throw InvalidOrder("ranks are not a permutation of 1.." + std::to_string(m));
            }
            seen[r - 1] = true;
            seq[r - 1] = static_cast<EdgeId>(e);
        }
        return from_sequence(seq);
    }

    /// Fisher-Yates over mt19937_64, so a seed gives the same order on every platform.
    static EdgeOrder random(std::size_t m, std::uint64_t seed) {
        std::vector<EdgeId> seq(m);
        for (std::size_t i = 0; i < m; ++i) seq[i] = static_cast<EdgeId>(i);
        std::mt19937_64 rng(seed);
        for (std::size_t i = m; i > 1; --i) {
            auto j = static_cast<std::size_t>(rng() % i);
            std::swap(seq[i - 1], seq[j]);
        }
        return from_sequence(seq);
    }

    [[nodiscard]] std::size_t size() const noexcept { return ranks_.size(); }
    [[nodiscard]] std::uint32_t rank(EdgeId e) const { return ranks_.at(e); }
    [[nodiscard]] bool less(EdgeId e, EdgeId f) const { return rank(e) < rank(f); }
    [[nodiscard]] std::span<const EdgeId> sequence() const noexcept { return sequence_; }
    [[nodiscard]] std::span<const std::uint32_t> ranks() const noexcept { return ranks_; }

    friend bool operator==(const EdgeOrder&, const EdgeOrder&) = default;

private:
    std::vector<std::uint32_t> ranks_;
    std::vector<EdgeId> sequence_;
};

inline void require_order(const Multigraph& g, const EdgeOrder& ord) {
    if (ord.size() != g.edge_count()) {
        throw InvalidOrder("order covers " + std::to_string(ord.size()) + " edges, graph has " +
                           std::to_string(g.edge_count()));
    }
}

inline void require_spanning_forest(const Multigraph& g, const EdgeSubset& forest) {
    if (!is_spanning_forest(g, forest)) {
        throw NotSpanningForest("edge subset is not a spanning forest");
    }
}

namespace detail {

/// Union-find without path compression so unions can be undone in LIFO order.
class RollbackDisjointSets {
public:
    explicit RollbackDisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
        for (std::size_t v = 0; v < n; ++v) parent_[v] = static_cast<Vertex>(v);
    }

    [[nodiscard]] Vertex find(Vertex x) const noexcept {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    bool unite(Vertex x, Vertex y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (size_[x] < size_[y]) std::swap(x, y);
        parent_[y] = x;
        size_[x] += size_[y];
        history_.push_back(y);
        return true;
    }

    void undo() {
        auto y = history_.back();
        history_.pop_back();
        auto x = parent_[y];
        size_[x] -= size_[y];
        parent_[y] = y;
    }

    [[nodiscard]] DisjointSets snapshot() const {
        DisjointSets sets(parent_.size());
        for (Vertex v = 0; v < parent_.size(); ++v) sets.unite(v, find(v));
        return sets;
    }

private:
    std::vector<Vertex> parent_;
    std::vector<std::size_t> size_;
    std::vector<Vertex> history_;
};

class ForestEnumerator {
public:
    explicit ForestEnumerator(const Multigraph& g)
        : g_(g), sets_(g.vertex_count()), current_(g.edge_count()),
          target_(g.vertex_count() - component_count(g)) {}

    template <class Fn>
    void run(Fn& fn) { descend(0, 0, fn); }

private:
    template <class Fn>
    void descend(std::size_t i, std::size_t chosen, Fn& fn) {
        if (chosen == target_) {
            fn(static_cast<const EdgeSubset&>(current_));
            return;
        }
        if (i == g_.edge_count()) return;
        const auto& e = g_.edges()[i];
        if (e.is_loop() || sets_.find(e.u) == sets_.find(e.v)) {
            descend(i + 1, chosen, fn);
            return;
        }
        sets_.unite(e.u, e.v);
        current_.insert(e.id);
        descend(i + 1, chosen + 1, fn);
        current_.erase(e.id);
        sets_.undo();
        if (reachable_without(i)) descend(i + 1, chosen, fn);
    }

    // Whether edge i's endpoints still meet through the current forest plus edges after i.
    [[nodiscard]] bool reachable_without(std::size_t i) const {
        auto sets = sets_.snapshot();
        for (std::size_t j = i + 1; j < g_.edge_count(); ++j) {
            const auto& f = g_.edges()[j];
            sets.unite(f.u, f.v);
        }
        const auto& e = g_.edges()[i];
        return sets.find(e.u) == sets.find(e.v);
    }

    const Multigraph& g_;
    RollbackDisjointSets sets_;
    EdgeSubset current_;
    std::size_t target_;
};

/// A spanning forest rooted per component, answering subtree and path queries.
class RootedForest {
public:
    RootedForest(const Multigraph& g, const EdgeSubset& forest)
        : parent_(g.vertex_count(), kNone), parent_edge_(g.vertex_count(), kNone),
          depth_(g.vertex_count(), 0), enter_(g.vertex_count(), 0), leave_(g.vertex_count(), 0) {
        const auto n = g.vertex_count();
        std::vector<std::vector<std::pair<Vertex, EdgeId>>> adjacent(n);
        forest.for_each([&](EdgeId id) {
            const auto& e = g.edge(id);
            adjacent[e.u].emplace_back(e.v, id);
            adjacent[e.v].emplace_back(e.u, id);
        });
        std::vector<bool> seen(n, false);
        std::vector<std::pair<Vertex, std::size_t>> stack;
        std::uint32_t clock = 0;
        for (Vertex root = 0; root < n; ++root) {
            if (seen[root]) continue;
            seen[root] = true;
            enter_[root] = clock++;
            stack.emplace_back(root, 0);
            while (!stack.empty()) {
                auto& [v, next] = stack.back();
                if (next == adjacent[v].size()) {
                    leave_[v] = clock++;
                    stack.pop_back();
                    continue;
                }
                auto [w, id] = adjacent[v][next++];
                if (seen[w]) continue;
                seen[w] = true;
                parent_[w] = v;
                parent_edge_[w] = id;
                depth_[w] = depth_[v] + 1;
                enter_[w] = clock++;
                stack.emplace_back(w, 0);
            }
        }
    }

    /// The endpoint of forest edge `e` farther from its root.
    [[nodiscard]] Vertex lower_end(const Edge& e) const noexcept {
        return depth_[e.u] > depth_[e.v] ? e.u : e.v;
    }

    [[nodiscard]] bool in_subtree(Vertex v, Vertex top) const noexcept {
        return enter_[top] <= enter_[v] && leave_[v] <= leave_[top];
    }

    /// Calls fn(edge id) for each forest edge on the u-v path; u and v must share a tree.
    template <class Fn>
    void for_each_path_edge(Vertex u, Vertex v, Fn&& fn) const {
        while (u != v) {
            if (depth_[u] < depth_[v]) std::swap(u, v);
            fn(static_cast<EdgeId>(parent_edge_[u]));
            u = parent_[u];
        }
    }

private:
    static constexpr std::uint32_t kNone = 0xffffffffU;

    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> parent_edge_;
    std::vector<std::uint32_t> depth_;
    std::vector<std::uint32_t> enter_;
    std::vector<std::uint32_t> leave_;
};

struct ActivitySets {
    EdgeSubset internal;
    EdgeSubset external;
};

// Cut/cycle characterization. `witnesses`, when given, receives the cut of
// F-e for forest edges and the cycle of F+f for links outside F.
inline ActivitySets compute_activity(const Multigraph& g, const EdgeOrder& ord, const EdgeSubset& forest,
                                     std::vector<EdgeSubset>* witnesses = nullptr) {
    const auto m = g.edge_count();
    RootedForest rooted(g, forest);
    ActivitySets out{EdgeSubset(m), EdgeSubset(m)};
    if (witnesses != nullptr) witnesses->assign(m, EdgeSubset(m));
    for (const auto& e : g.edges()) {
        const auto r = ord.rank(e.id);
        bool maximal = true;
        if (forest.contains(e.id)) {
            const auto low = rooted.lower_end(e);
            for (const auto& x : g.edges()) {
                if (rooted.in_subtree(x.u, low) == rooted.in_subtree(x.v, low)) continue;
                if (ord.rank(x.id) > r) maximal = false;
                if (witnesses != nullptr) (*witnesses)[e.id].insert(x.id);
            }
            if (maximal) out.internal.insert(e.id);
        } else {
            if (!e.is_loop()) {
                rooted.for_each_path_edge(e.u, e.v, [&](EdgeId id) {
                    if (ord.rank(id) > r) maximal = false;
                    if (witnesses != nullptr) (*witnesses)[e.id].insert(id);
                });
                if (witnesses != nullptr) (*witnesses)[e.id].insert(e.id);
            }
            if (maximal) out.external.insert(e.id);
        }
    }
    return out;
}

}  // namespace detail

/// Calls fn(forest) for every spanning forest, in lexicographic order of
/// sorted edge-id tuples. An edgeless graph yields the empty set once.
template <class Fn>
void for_each_spanning_forest(const Multigraph& g, Fn&& fn) {
    detail::ForestEnumerator walker(g);
    walker.run(fn);
}

inline std::vector<EdgeSubset> enumerate_spanning_forests(const Multigraph& g) {
    std::vector<EdgeSubset> out;
    for_each_spanning_forest(g, [&](const EdgeSubset& f) { out.push_back(f); });
    return out;
}

/// Calls fn(forest, internal, external) for every spanning forest.
template <class Fn>
void for_each_forest_activity(const Multigraph& g, const EdgeOrder& ord, Fn&& fn) {
    require_order(g, ord);
    for_each_spanning_forest(g, [&](const EdgeSubset& forest) {
        auto sets = detail::compute_activity(g, ord, forest);
        fn(forest, sets.internal, sets.external);
    });
}

/// E_i: forest edges of maximum rank in the cut they alone cross.
inline EdgeSubset internal_activity(const Multigraph& g, const EdgeOrder& ord, const EdgeSubset& forest) {
    require_order(g, ord);
    require_spanning_forest(g, forest);
    return detail::compute_activity(g, ord, forest).internal;
}

/// E_e: non-forest edges of maximum rank in the cycle they close. Loops always qualify.
inline EdgeSubset external_activity(const Multigraph& g, const EdgeOrder& ord, const EdgeSubset& forest) {
    require_order(g, ord);
    require_spanning_forest(g, forest);
    return detail::compute_activity(g, ord, forest).external;
}

struct ActivityReport {
    EdgeSubset forest;
    EdgeSubset internal;
    EdgeSubset external;
    /// Indexed by edge id: the cut of F-e for forest edges, the cycle of F+f
    /// otherwise. A loop's self-cycle is left empty.
    std::vector<EdgeSubset> witnesses;

    [[nodiscard]] std::size_t internal_count() const { return internal.size(); }
    [[nodiscard]] std::size_t external_count() const { return external.size(); }
};

inline ActivityReport activity_report(const Multigraph& g, const EdgeOrder& ord, const EdgeSubset& forest) {
    require_order(g, ord);
    require_spanning_forest(g, forest);
    ActivityReport report;
    report.forest = forest;
    auto sets = detail::compute_activity(g, ord, forest, &report.witnesses);
    report.internal = std::move(sets.internal);
    report.external = std::move(sets.external);
    return report;
}

struct IndependenceCheck {
    bool passed = true;
    std::size_t pairs_checked = 0;
    /// First (internal, external) pair that broke the component relations.
    std::optional<std::pair<EdgeId, EdgeId>> violation;
};

/// For every internally active e and externally active f of the forest F:
/// k(F) = k(F+f) and k(F-e+f) = k(F-e) = k(F) + 1.
inline IndependenceCheck check_independence(const Multigraph& g, const EdgeOrder& ord, const EdgeSubset& forest) {
    require_order(g, ord);
    require_spanning_forest(g, forest);
    auto sets = detail::compute_activity(g, ord, forest);
    IndependenceCheck out;
    const auto k = component_count(g, forest);
    for (EdgeId e : sets.internal.ids()) {
        auto without_e = forest;
        without_e.erase(e);
        const auto k_minus = component_count(g, without_e);
        for (EdgeId f : sets.external.ids()) {
            auto with_f = forest;
            with_f.insert(f);
            auto swapped = without_e;
            swapped.insert(f);
            ++out.pairs_checked;
            const bool ok = component_count(g, with_f) == k && k_minus == k + 1 &&
                            component_count(g, swapped) == k_minus;
            if (!ok) {
                out.passed = false;
                out.violation = std::make_pair(e, f);
                return out;
            }
        }
    }
    return out;
}

}  // namespace forge

#endif  // ACTIVITY_FORGE_ACTIVITY_HPP
