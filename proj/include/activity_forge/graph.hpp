#ifndef ACTIVITY_FORGE_GRAPH_HPP
#define ACTIVITY_FORGE_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "activity_forge/errors.hpp"

namespace forge {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// Largest edge count the exhaustive 2^m routines accept by default.
inline constexpr std::size_t kDefaultExhaustiveLimit = 24;
/// Exhaustive routines index subsets by a 64-bit mask.
inline constexpr std::size_t kMaxExhaustiveLimit = 62;

struct Edge {
    EdgeId id;
    Vertex u;
    Vertex v;

    [[nodiscard]] bool is_loop() const noexcept { return u == v; }
    [[nodiscard]] Vertex other(Vertex w) const noexcept { return w == u ? v : u; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// A set of edge ids drawn from a graph with `width()` edges, stored as a bitset.
class EdgeSubset {
public:
    EdgeSubset() = default;

    explicit EdgeSubset(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

    static EdgeSubset from_ids(std::size_t width, std::span<const EdgeId> ids) {
        EdgeSubset s(width);
        for (EdgeId id : ids) {
            if (id >= width) {
                throw InvalidSubset("edge id " + std::to_string(id) + " out of range for " +
                                    std::to_string(width) + " edges");
            }
            s.insert(id);
        }
        return s;
    }

    static EdgeSubset from_ids(std::size_t width, std::initializer_list<EdgeId> ids) {
        return from_ids(width, std::span<const EdgeId>(ids.begin(), ids.size()));
    }

    static EdgeSubset from_mask(std::size_t width, std::uint64_t mask) {
        if (width < 64 && (mask >> width) != 0) {
            throw InvalidSubset("mask has bits beyond width " + std::to_string(width));
        }
        EdgeSubset s(width);
        if (!s.words_.empty()) s.words_[0] = mask;
        return s;
    }

    static EdgeSubset full(std::size_t width) {
        EdgeSubset s(width);
        for (std::size_t i = 0; i < width; ++i) s.insert(static_cast<EdgeId>(i));
        return s;
    }

    [[nodiscard]] std::size_t width() const noexcept { return width_; }

    [[nodiscard]] std::size_t size() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    [[nodiscard]] bool empty() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }

    [[nodiscard]] bool contains(EdgeId id) const noexcept {
        return id < width_ && ((words_[id / 64] >> (id % 64)) & 1U) != 0;
    }

    void insert(EdgeId id) { words_[id / 64] |= std::uint64_t{1} << (id % 64); }
    void erase(EdgeId id) { words_[id / 64] &= ~(std::uint64_t{1} << (id % 64)); }

    /// Members in increasing id order.
    [[nodiscard]] std::vector<EdgeId> ids() const {
        std::vector<EdgeId> out;
        out.reserve(size());
        for_each([&](EdgeId id) { out.push_back(id); });
        return out;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto bits = words_[w];
            while (bits != 0) {
                auto bit = static_cast<std::size_t>(std::countr_zero(bits));
                fn(static_cast<EdgeId>(w * 64 + bit));
                bits &= bits - 1;
            }
        }
    }

    /// Only meaningful for width() <= 64.
    [[nodiscard]] std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

    [[nodiscard]] bool is_subset_of(const EdgeSubset& other) const noexcept {
        if (width_ != other.width_) return false;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((words_[i] & ~other.words_[i]) != 0) return false;
        }
        return true;
    }

    [[nodiscard]] EdgeSubset complement() const {
        EdgeSubset out(width_);
        for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
        out.trim();
        return out;
    }

    EdgeSubset& operator|=(const EdgeSubset& o) { return combine(o, [](auto a, auto b) { return a | b; }); }
    EdgeSubset& operator&=(const EdgeSubset& o) { return combine(o, [](auto a, auto b) { return a & b; }); }
    EdgeSubset& operator-=(const EdgeSubset& o) { return combine(o, [](auto a, auto b) { return a & ~b; }); }

    friend EdgeSubset operator|(EdgeSubset a, const EdgeSubset& b) { return a |= b; }
    friend EdgeSubset operator&(EdgeSubset a, const EdgeSubset& b) { return a &= b; }
    friend EdgeSubset operator-(EdgeSubset a, const EdgeSubset& b) { return a -= b; }

    friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

    /// Lexicographic order of the sorted id tuples.
    friend std::strong_ordering operator<=>(const EdgeSubset& a, const EdgeSubset& b) {
        auto x = a.ids();
        auto y = b.ids();
        return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
    }

private:
    template <class Op>
    EdgeSubset& combine(const EdgeSubset& o, Op op) {
        if (width_ != o.width_) throw InvalidSubset("edge subsets of different widths combined");
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = op(words_[i], o.words_[i]);
        return *this;
    }

    void trim() noexcept {
        if (width_ % 64 != 0 && !words_.empty()) {
            words_.back() &= (std::uint64_t{1} << (width_ % 64)) - 1;
        }
    }

    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Union-find with union by size and path halving.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
        std::iota(parent_.begin(), parent_.end(), Vertex{0});
    }

    Vertex find(Vertex x) noexcept {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Returns false when x and y were already joined.
    bool unite(Vertex x, Vertex y) noexcept {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (size_[x] < size_[y]) std::swap(x, y);
        parent_[y] = x;
        size_[x] += size_[y];
        --sets_;
        return true;
    }

    std::size_t set_size(Vertex x) noexcept { return size_[find(x)]; }
    [[nodiscard]] std::size_t set_count() const noexcept { return sets_; }

private:
    std::vector<Vertex> parent_;
    std::vector<std::size_t> size_;
    std::size_t sets_;
};

/// Undirected multigraph on vertices 0..n-1. Loops and parallel edges are
/// allowed; edge ids are positions in the edge list.
class Multigraph {
public:
    Multigraph() = default;

    Multigraph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> ends)
        : n_(vertex_count) {
        edges_.reserve(ends.size());
        for (const auto& [u, v] : ends) {
            if (u >= n_ || v >= n_) {
                throw InvalidGraph("edge " + std::to_string(edges_.size()) + " endpoint out of range (" +
                                   std::to_string(u) + "," + std::to_string(v) + ") for " +
                                   std::to_string(n_) + " vertices");
            }
            edges_.push_back(Edge{static_cast<EdgeId>(edges_.size()), u, v});
        }
    }

    Multigraph(std::size_t vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> ends)
        : Multigraph(vertex_count, std::span<const std::pair<Vertex, Vertex>>(ends.begin(), ends.size())) {}

    [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
    [[nodiscard]] const Edge& edge(EdgeId id) const { return edges_.at(id); }

    [[nodiscard]] EdgeSubset empty_set() const { return EdgeSubset(edges_.size()); }
    [[nodiscard]] EdgeSubset full_set() const { return EdgeSubset::full(edges_.size()); }

    [[nodiscard]] EdgeSubset subset(std::initializer_list<EdgeId> ids) const {
        return EdgeSubset::from_ids(edges_.size(), ids);
    }

    void require_subset(const EdgeSubset& a) const {
        if (a.width() != edges_.size()) {
            throw InvalidSubset("edge subset of width " + std::to_string(a.width()) +
                                " used with a graph of " + std::to_string(edges_.size()) + " edges");
        }
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

namespace detail {

inline DisjointSets components_of(const Multigraph& g, const EdgeSubset& a) {
    DisjointSets sets(g.vertex_count());
    a.for_each([&](EdgeId id) {
        const auto& e = g.edge(id);
        sets.unite(e.u, e.v);
    });
    return sets;
}

inline std::size_t component_count_mask(const Multigraph& g, std::uint64_t mask) {
    DisjointSets sets(g.vertex_count());
    while (mask != 0) {
        const auto& e = g.edges()[static_cast<std::size_t>(std::countr_zero(mask))];
        sets.unite(e.u, e.v);
        mask &= mask - 1;
    }
    return sets.set_count();
}

}  // namespace detail

/// k of the spanning subgraph (V, A). Isolated vertices count; loops never merge.
inline std::size_t component_count(const Multigraph& g, const EdgeSubset& a) {
    g.require_subset(a);
    return detail::components_of(g, a).set_count();
}

inline std::size_t component_count(const Multigraph& g) {
    return component_count(g, g.full_set());
}

/// Entry i-1 holds k_i, the number of components of (V, A) with exactly i vertices.
inline std::vector<std::size_t> component_size_profile(const Multigraph& g, const EdgeSubset& a) {
    g.require_subset(a);
    auto sets = detail::components_of(g, a);
    std::vector<std::size_t> profile(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (sets.find(v) == v) ++profile[sets.set_size(v) - 1];
    }
    return profile;
}

inline bool is_forest(const Multigraph& g, const EdgeSubset& a) {
    g.require_subset(a);
    DisjointSets sets(g.vertex_count());
    bool acyclic = true;
    a.for_each([&](EdgeId id) {
        const auto& e = g.edge(id);
        if (!sets.unite(e.u, e.v)) acyclic = false;
    });
    return acyclic;
}

inline bool is_spanning_forest(const Multigraph& g, const EdgeSubset& a) {
    return is_forest(g, a) && component_count(g, a) == component_count(g);
}

/// Cycle rank |A| - n + k(A); zero exactly on forests.
inline std::size_t nullity(const Multigraph& g, const EdgeSubset& a) {
    return a.size() + component_count(g, a) - g.vertex_count();
}

inline void require_exhaustive(const Multigraph& g, std::size_t limit) {
    if (limit > kMaxExhaustiveLimit) {
        throw GuardExceeded(limit, kMaxExhaustiveLimit);
    }
    if (g.edge_count() > limit) throw GuardExceeded(g.edge_count(), limit);
}

/// Calls fn(mask) for every A ⊆ E, bit i of mask standing for edge i.
template <class Fn>
void for_each_subset_mask(const Multigraph& g, std::size_t limit, Fn&& fn) {
    require_exhaustive(g, limit);
    const std::uint64_t count = std::uint64_t{1} << g.edge_count();
    for (std::uint64_t mask = 0; mask < count; ++mask) fn(mask);
}

/// Direct sum of f(A) over all 2^m edge subsets.
template <class Value, class Summand>
Value subset_sum(const Multigraph& g, Summand&& f, Value zero = Value{},
                 std::size_t limit = kDefaultExhaustiveLimit) {
    Value total = std::move(zero);
    for_each_subset_mask(g, limit, [&](std::uint64_t mask) {
        total += f(EdgeSubset::from_mask(g.edge_count(), mask));
    });
    return total;
}

}  // namespace forge

#endif  // ACTIVITY_FORGE_GRAPH_HPP
