#ifndef ACTIVITY_FORGE_BIJECTION_HPP
#define ACTIVITY_FORGE_BIJECTION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "activity_forge/activity.hpp"
#include "activity_forge/errors.hpp"
#include "activity_forge/graph.hpp"
#include "activity_forge/numbers.hpp"

namespace forge {

/// (A_f, A_i, A_e): a spanning forest, some of its internally active edges to
/// delete and some of its externally active edges to add.
struct ForestTriple {
    EdgeSubset forest;
    EdgeSubset deletions;
    EdgeSubset additions;

    friend bool operator==(const ForestTriple&, const ForestTriple&) = default;
};

enum class TripleFault {
    forest_not_spanning,
    deletion_not_internally_active,
    addition_not_externally_active,
};

struct InvalidTriple : Error {
    InvalidTriple(TripleFault fault, std::optional<EdgeId> edge, const std::string& what)
        : Error(what), fault(fault), edge(edge) {}

    TripleFault fault;
    std::optional<EdgeId> edge;
};

inline void validate_triple(const Multigraph& g, const EdgeOrder& ord, const ForestTriple& t) {
    require_order(g, ord);
    g.require_subset(t.forest);
    g.require_subset(t.deletions);
    g.require_subset(t.additions);
    if (!is_spanning_forest(g, t.forest)) {
        throw InvalidTriple(TripleFault::forest_not_spanning, std::nullopt, "triple forest is not a spanning forest");
    }
    auto sets = detail::compute_activity(g, ord, t.forest);
    auto bad_deletions = t.deletions - sets.internal;
    if (!bad_deletions.empty()) {
        auto e = bad_deletions.ids().front();
        throw InvalidTriple(TripleFault::deletion_not_internally_active, e,
                            "deletion " + std::to_string(e) + " is not internally active");
    }
    auto bad_additions = t.additions - sets.external;
    if (!bad_additions.empty()) {
        auto f = bad_additions.ids().front();
        throw InvalidTriple(TripleFault::addition_not_externally_active, f,
                            "addition " + std::to_string(f) + " is not externally active");
    }
}

/// (A_f \ A_i) ∪ A_e, after checking the triple is valid.
inline EdgeSubset expand(const Multigraph& g, const EdgeOrder& ord, const ForestTriple& t) {
    validate_triple(g, ord, t);
    return (t.forest - t.deletions) | t.additions;
}

/// The unique triple expanding to `a`. Edges of A are offered in increasing
/// rank, then the rest in decreasing rank, to a greedy acyclic insertion.
inline ForestTriple classify(const Multigraph& g, const EdgeOrder& ord, const EdgeSubset& a) {
    g.require_subset(a);
    require_order(g, ord);
    std::vector<EdgeId> sequence;
    sequence.reserve(g.edge_count());
    for (EdgeId e : ord.sequence()) {
        if (a.contains(e)) sequence.push_back(e);
    }
    for (auto it = ord.sequence().rbegin(); it != ord.sequence().rend(); ++it) {
        if (!a.contains(*it)) sequence.push_back(*it);
    }

    DisjointSets sets(g.vertex_count());
    EdgeSubset forest(g.edge_count());
    for (EdgeId id : sequence) {
        const auto& e = g.edge(id);
        if (sets.unite(e.u, e.v)) forest.insert(id);
    }
    return ForestTriple{forest, forest - a, a - forest};
}

struct ForestCoverage {
    EdgeSubset forest;
    std::size_t internal = 0;
    std::size_t external = 0;
    std::uint64_t covered = 0;
};

struct PartitionReport {
    std::size_t edges = 0;
    std::uint64_t expected = 0;  // 2^m
    std::uint64_t covered = 0;   // distinct subsets produced
    std::uint64_t triples = 0;
    std::vector<ForestCoverage> forests;
    std::optional<EdgeSubset> duplicate;
    std::optional<EdgeSubset> missing;

    [[nodiscard]] bool ok() const noexcept {
        return !duplicate && !missing && covered == expected && triples == expected;
    }
};

/// Expands every triple of every spanning forest and checks that the images
/// cover each subset of E exactly once.
inline PartitionReport verify_partition(const Multigraph& g, const EdgeOrder& ord,
                                        std::size_t limit = kDefaultExhaustiveLimit) {
    require_exhaustive(g, limit);
    require_order(g, ord);
    const auto m = g.edge_count();
    PartitionReport report;
    report.edges = m;
    report.expected = std::uint64_t{1} << m;
    std::vector<std::uint64_t> seen((report.expected + 63) / 64, 0);

    for_each_forest_activity(g, ord, [&](const EdgeSubset& forest, const EdgeSubset& internal,
                                         const EdgeSubset& external) {
        ForestCoverage cover{forest, internal.size(), external.size(), 0};
        const auto base = forest.mask();
        const auto in_mask = internal.mask();
        const auto ex_mask = external.mask();
        // Walk every submask of the internal and external sets.
        std::uint64_t del = in_mask;
        while (true) {
            std::uint64_t add = ex_mask;
            while (true) {
                const auto a = (base & ~del) | add;
                auto& word = seen[a / 64];
                const auto bit = std::uint64_t{1} << (a % 64);
                ++report.triples;
                if ((word & bit) != 0) {
                    if (!report.duplicate) report.duplicate = EdgeSubset::from_mask(m, a);
                } else {
                    word |= bit;
                    ++report.covered;
                    ++cover.covered;
                }
                if (add == 0) break;
                add = (add - 1) & ex_mask;
            }
            if (del == 0) break;
            del = (del - 1) & in_mask;
        }
        report.forests.push_back(std::move(cover));
    });

    for (std::uint64_t a = 0; a < report.expected; ++a) {
        if ((seen[a / 64] >> (a % 64) & 1U) == 0) {
            report.missing = EdgeSubset::from_mask(m, a);
            break;
        }
    }
    return report;
}

/// Σ_F 2^{i(F)+e(F)}, exactly.
inline Integer activity_weight_sum(const Multigraph& g, const EdgeOrder& ord) {
    Integer total = 0;
    for_each_forest_activity(g, ord, [&](const EdgeSubset&, const EdgeSubset& internal, const EdgeSubset& external) {
        total += Integer(1) << (internal.size() + external.size());
    });
    return total;
}

inline bool activity_count_identity(const Multigraph& g, const EdgeOrder& ord) {
    return activity_weight_sum(g, ord) == (Integer(1) << g.edge_count());
}

/// Calls fn(triple, subset) for every triple, subset = its expansion.
template <class Fn>
void for_each_triple(const Multigraph& g, const EdgeOrder& ord, Fn&& fn) {
    const auto m = g.edge_count();
    for_each_forest_activity(g, ord, [&](const EdgeSubset& forest, const EdgeSubset& internal,
                                         const EdgeSubset& external) {
        const auto in_ids = internal.ids();
        const auto ex_ids = external.ids();
        const std::uint64_t in_count = std::uint64_t{1} << in_ids.size();
        const std::uint64_t ex_count = std::uint64_t{1} << ex_ids.size();
        for (std::uint64_t di = 0; di < in_count; ++di) {
            EdgeSubset deletions(m);
            for (std::size_t b = 0; b < in_ids.size(); ++b) {
                if ((di >> b) & 1U) deletions.insert(in_ids[b]);
            }
            for (std::uint64_t ai = 0; ai < ex_count; ++ai) {
                EdgeSubset additions(m);
                for (std::size_t b = 0; b < ex_ids.size(); ++b) {
                    if ((ai >> b) & 1U) additions.insert(ex_ids[b]);
                }
                ForestTriple t{forest, deletions, additions};
                auto a = (forest - deletions) | additions;
                fn(static_cast<const ForestTriple&>(t), static_cast<const EdgeSubset&>(a));
            }
        }
    });
}

/// Σ over all triples of f(expansion); equals the direct sum of f over 2^E.
template <class Value, class Summand>
Value transfer_sum(const Multigraph& g, const EdgeOrder& ord, Summand&& f, Value zero = Value{}) {
    Value total = std::move(zero);
    for_each_triple(g, ord, [&](const ForestTriple&, const EdgeSubset& a) { total += f(a); });
    return total;
}

struct RoundTripSample {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::optional<EdgeSubset> first_failure;
};

/// Random spanning forest: greedy insertion over a random permutation of the edges.
inline EdgeSubset random_spanning_forest(const Multigraph& g, std::mt19937_64& rng) {
    auto shuffle = EdgeOrder::random(g.edge_count(), rng());
    DisjointSets sets(g.vertex_count());
    EdgeSubset forest(g.edge_count());
    for (EdgeId id : shuffle.sequence()) {
        const auto& e = g.edge(id);
        if (sets.unite(e.u, e.v)) forest.insert(id);
    }
    return forest;
}

/// Randomized round trips for graphs too large to enumerate: `samples` random
/// subsets through expand∘classify and `samples` random triples through
/// classify∘expand.
inline RoundTripSample sampled_roundtrip(const Multigraph& g, const EdgeOrder& ord, std::size_t samples,
                                         std::uint64_t seed) {
    require_order(g, ord);
    const auto m = g.edge_count();
    std::mt19937_64 rng(seed);
    RoundTripSample out;
    auto fail = [&](const EdgeSubset& a) {
        ++out.failures;
        if (!out.first_failure) out.first_failure = a;
    };
    for (std::size_t s = 0; s < samples; ++s) {
        EdgeSubset a(m);
        for (EdgeId e = 0; e < m; ++e) {
            if (rng() & 1U) a.insert(e);
        }
        ++out.checked;
        if (expand(g, ord, classify(g, ord, a)) != a) fail(a);
    }
    for (std::size_t s = 0; s < samples; ++s) {
        auto forest = random_spanning_forest(g, rng);
        auto sets = detail::compute_activity(g, ord, forest);
        EdgeSubset deletions(m);
        EdgeSubset additions(m);
        sets.internal.for_each([&](EdgeId e) { if (rng() & 1U) deletions.insert(e); });
        sets.external.for_each([&](EdgeId f) { if (rng() & 1U) additions.insert(f); });
        ForestTriple t{forest, deletions, additions};
        auto a = expand(g, ord, t);
        ++out.checked;
        if (classify(g, ord, a) != t) fail(a);
    }
    return out;
}

}  // namespace forge

#endif  // ACTIVITY_FORGE_BIJECTION_HPP
