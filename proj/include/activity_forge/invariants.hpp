#ifndef ACTIVITY_FORGE_INVARIANTS_HPP
#define ACTIVITY_FORGE_INVARIANTS_HPP

// Graph polynomials, each in the representations that can be cross-checked
// through the activity bijection: sums over spanning forests (or trees)
// weighted by activities, and sums over all 2^m edge subsets.
//
// Subset forms refuse graphs with more than `limit` edges. Forest forms have
// no limit. Summands are first tallied by their exponent pattern with machine
// integers and expanded into polynomials once per pattern.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "activity_forge/activity.hpp"
#include "activity_forge/errors.hpp"
#include "activity_forge/graph.hpp"
#include "activity_forge/poly.hpp"

namespace forge {

namespace detail {

inline const std::vector<std::string>& tutte_vars() {
    static const std::vector<std::string> vars{"x", "y"};
    return vars;
}

/// base^0 .. base^top.
inline std::vector<SparsePoly> powers_of(const SparsePoly& base, std::size_t top) {
    std::vector<SparsePoly> out;
    out.reserve(top + 1);
    out.push_back(SparsePoly::constant(1, base.variables()));
    for (std::size_t i = 1; i <= top; ++i) out.push_back(out.back() * base);
    return out;
}

/// c0 + c1 v (v a single named variable).
inline SparsePoly linear(const std::string& v, long c0, long c1) {
    return SparsePoly::constant(c0, {v}) + SparsePoly::variable(v) * Integer(c1);
}

/// Component sizes of (V, A) for A given as a mask, as the k_1..k_n profile.
inline std::vector<std::uint32_t> profile_mask(const Multigraph& g, std::uint64_t mask) {
    DisjointSets sets(g.vertex_count());
    while (mask != 0) {
        const auto& e = g.edges()[static_cast<std::size_t>(std::countr_zero(mask))];
        sets.unite(e.u, e.v);
        mask &= mask - 1;
    }
    std::vector<std::uint32_t> profile(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (sets.find(v) == v) ++profile[sets.set_size(v) - 1];
    }
    return profile;
}

inline std::vector<std::uint32_t> profile_of(const Multigraph& g, const EdgeSubset& a) {
    auto wide = component_size_profile(g, a);
    return {wide.begin(), wide.end()};
}

/// Calls fn(forest, internal, external-count, deletion set) for every subset
/// of the internal activity of every spanning forest with nonzero weight.
template <class Fn>
void for_each_internal_deletion(const Multigraph& g, const EdgeOrder& ord, bool only_externally_passive,
                                Fn&& fn) {
    for_each_forest_activity(g, ord, [&](const EdgeSubset& forest, const EdgeSubset& internal,
                                         const EdgeSubset& external) {
        const auto ext = external.size();
        if (only_externally_passive && ext != 0) return;
        const auto ids = internal.ids();
        const std::uint64_t count = std::uint64_t{1} << ids.size();
        for (std::uint64_t pick = 0; pick < count; ++pick) {
            EdgeSubset deletions(g.edge_count());
            for (std::size_t b = 0; b < ids.size(); ++b) {
                if ((pick >> b) & 1U) deletions.insert(ids[b]);
            }
            fn(forest, deletions, ext);
        }
    });
}

}  // namespace detail

inline std::vector<std::string> uprime_variables(std::size_t vertex_count) {
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= vertex_count; ++i) vars.push_back("x_" + std::to_string(i));
    vars.emplace_back("y");
    return vars;
}

// ---- Tutte polynomial ----

/// T(G; x, y) = Σ_F x^{i(F)} y^{e(F)}.
inline SparsePoly tutte_forest(const Multigraph& g, const EdgeOrder& ord) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> tally;
    for_each_forest_activity(g, ord, [&](const EdgeSubset&, const EdgeSubset& internal, const EdgeSubset& external) {
        ++tally[{static_cast<std::uint32_t>(internal.size()), static_cast<std::uint32_t>(external.size())}];
    });
    SparsePoly out(detail::tutte_vars());
    for (const auto& [ie, count] : tally) out.add_term({ie.first, ie.second}, count);
    return out;
}

/// T(G; x, y) = Σ_A (x-1)^{k(A)-k(G)} (y-1)^{|A|-n+k(A)}.
inline SparsePoly tutte_subset(const Multigraph& g, std::size_t limit = kDefaultExhaustiveLimit) {
    const auto n = g.vertex_count();
    const auto kg = component_count(g);
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> tally;
    for_each_subset_mask(g, limit, [&](std::uint64_t mask) {
        const auto k = detail::component_count_mask(g, mask);
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        ++tally[{k - kg, size + k - n}];
    });
    const auto xs = detail::powers_of(detail::linear("x", -1, 1).over(detail::tutte_vars()), n);
    const auto ys = detail::powers_of(detail::linear("y", -1, 1).over(detail::tutte_vars()), g.edge_count());
    SparsePoly out(detail::tutte_vars());
    for (const auto& [ab, count] : tally) out += xs[ab.first] * ys[ab.second] * Integer(count);
    return out;
}

// ---- chromatic polynomial ----

/// Whitney's rank expansion χ(G; x) = Σ_A x^{k(A)} (-1)^{|A|}.
inline SparsePoly chromatic_subset(const Multigraph& g, std::size_t limit = kDefaultExhaustiveLimit) {
    std::vector<std::int64_t> coef(g.vertex_count() + 1, 0);
    for_each_subset_mask(g, limit, [&](std::uint64_t mask) {
        const auto k = detail::component_count_mask(g, mask);
        coef[k] += (std::popcount(mask) % 2 == 0) ? 1 : -1;
    });
    SparsePoly out({"x"});
    for (std::size_t k = 0; k < coef.size(); ++k) out.add_term({static_cast<std::uint32_t>(k)}, coef[k]);
    return out;
}

/// χ(G; x) = (-1)^n (-x)^{k(G)} Σ_{F: e(F)=0} (1-x)^{i(F)}.
inline SparsePoly chromatic_forest(const Multigraph& g, const EdgeOrder& ord) {
    const auto n = g.vertex_count();
    const auto kg = component_count(g);
    std::map<std::size_t, std::uint64_t> tally;
    for_each_forest_activity(g, ord, [&](const EdgeSubset&, const EdgeSubset& internal, const EdgeSubset& external) {
        if (external.empty()) ++tally[internal.size()];
    });
    const auto one_minus_x = detail::linear("x", 1, -1);
    SparsePoly sum({"x"});
    for (const auto& [i, count] : tally) sum += pow(one_minus_x, i) * Integer(count);
    const Integer sign = ((n + kg) % 2 == 0) ? 1 : -1;
    return SparsePoly::monomial({"x"}, {static_cast<std::uint32_t>(kg)}, sign) * sum;
}

/// Broken-cycle form: Σ over forests with e(F)=0 and every A' = A_f \ A_i of
/// x^{n-|A'|} (-1)^{|A'|}.
inline SparsePoly chromatic_broken_cycle(const Multigraph& g, const EdgeOrder& ord) {
    const auto n = g.vertex_count();
    std::vector<std::int64_t> coef(n + 1, 0);
    detail::for_each_internal_deletion(g, ord, true, [&](const EdgeSubset& forest, const EdgeSubset& deletions,
                                                         std::size_t) {
        const auto kept = forest.size() - deletions.size();
        coef[n - kept] += (kept % 2 == 0) ? 1 : -1;
    });
    SparsePoly out({"x"});
    for (std::size_t k = 0; k <= n; ++k) out.add_term({static_cast<std::uint32_t>(k)}, coef[k]);
    return out;
}

inline constexpr std::size_t kMaxColoringVertices = 12;
inline constexpr std::size_t kMaxColors = 16;
inline constexpr std::uint64_t kMaxColoringAssignments = 100'000'000;

/// Number of proper colorings with at most `colors` colors, by trying all
/// colors^n assignments.
inline std::uint64_t chromatic_count(const Multigraph& g, std::size_t colors) {
    const auto n = g.vertex_count();
    if (n > kMaxColoringVertices) throw GuardExceeded(n, kMaxColoringVertices);
    if (colors > kMaxColors) throw GuardExceeded(colors, kMaxColors);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= colors;
        if (total > kMaxColoringAssignments) throw GuardExceeded(static_cast<std::size_t>(total), kMaxColoringAssignments);
    }
    std::vector<std::size_t> color(n, 0);
    std::uint64_t proper = 0;
    for (std::uint64_t a = 0; a < total; ++a) {
        auto rest = a;
        for (std::size_t v = 0; v < n; ++v) {
            color[v] = rest % colors;
            rest /= colors;
        }
        bool ok = true;
        for (const auto& e : g.edges()) {
            if (color[e.u] == color[e.v]) {
                ok = false;
                break;
            }
        }
        if (ok) ++proper;
    }
    return proper;
}

// ---- connected spanning subgraphs and reliability ----

/// S(G; y) = Σ_A [k(A)=1] y^{|A|}.
inline SparsePoly connected_gf_subset(const Multigraph& g, std::size_t limit = kDefaultExhaustiveLimit) {
    std::vector<std::uint64_t> by_size(g.edge_count() + 1, 0);
    for_each_subset_mask(g, limit, [&](std::uint64_t mask) {
        if (detail::component_count_mask(g, mask) == 1) ++by_size[static_cast<std::size_t>(std::popcount(mask))];
    });
    SparsePoly out({"y"});
    for (std::size_t s = 0; s < by_size.size(); ++s) out.add_term({static_cast<std::uint32_t>(s)}, by_size[s]);
    return out;
}

/// S(G; y) = y^{n-1} Σ_T (1+y)^{e(T)}; zero unless G is connected.
inline SparsePoly connected_gf_tree(const Multigraph& g, const EdgeOrder& ord) {
    require_order(g, ord);
    if (component_count(g) != 1) return SparsePoly({"y"});
    std::map<std::size_t, std::uint64_t> tally;
    for_each_forest_activity(g, ord, [&](const EdgeSubset&, const EdgeSubset&, const EdgeSubset& external) {
        ++tally[external.size()];
    });
    const auto one_plus_y = detail::linear("y", 1, 1);
    SparsePoly sum({"y"});
    for (const auto& [e, count] : tally) sum += pow(one_plus_y, e) * Integer(count);
    return SparsePoly::monomial({"y"}, {static_cast<std::uint32_t>(g.vertex_count() - 1)}) * sum;
}

/// All-terminal reliability R(G; p) = Σ_A [k(A)=1] p^{|A|} (1-p)^{|E \ A|}.
inline SparsePoly reliability_subset(const Multigraph& g, std::size_t limit = kDefaultExhaustiveLimit) {
    const auto m = g.edge_count();
    std::vector<std::uint64_t> by_size(m + 1, 0);
    for_each_subset_mask(g, limit, [&](std::uint64_t mask) {
        if (detail::component_count_mask(g, mask) == 1) ++by_size[static_cast<std::size_t>(std::popcount(mask))];
    });
    const auto failing = detail::powers_of(detail::linear("p", 1, -1), m);
    SparsePoly out({"p"});
    for (std::size_t s = 0; s <= m; ++s) {
        if (by_size[s] == 0) continue;
        out += SparsePoly::monomial({"p"}, {static_cast<std::uint32_t>(s)}, by_size[s]) * failing[m - s];
    }
    return out;
}

/// R(G; p) = p^{n-1} Σ_T (1-p)^{m-n+1-e(T)}; zero unless G is connected.
/// e(T) never exceeds the cycle rank m-n+1, so every exponent is nonnegative.
inline SparsePoly reliability_tree(const Multigraph& g, const EdgeOrder& ord) {
    require_order(g, ord);
    if (component_count(g) != 1) return SparsePoly({"p"});
    const auto cycle_rank = g.edge_count() + 1 - g.vertex_count();
    std::map<std::size_t, std::uint64_t> tally;
    for_each_forest_activity(g, ord, [&](const EdgeSubset&, const EdgeSubset&, const EdgeSubset& external) {
        ++tally[external.size()];
    });
    const auto failing = detail::powers_of(detail::linear("p", 1, -1), cycle_rank);
    SparsePoly sum({"p"});
    for (const auto& [e, count] : tally) sum += failing[cycle_rank - e] * Integer(count);
    return SparsePoly::monomial({"p"}, {static_cast<std::uint32_t>(g.vertex_count() - 1)}) * sum;
}

// ---- U' ----

/// U'(G; x_1..x_n, y) = Σ_A Π_i x_i^{k_i(A)} y^{|A|}.
inline SparsePoly uprime_subset(const Multigraph& g, std::size_t limit = kDefaultExhaustiveLimit) {
    const auto n = g.vertex_count();
    std::map<std::pair<std::vector<std::uint32_t>, std::uint32_t>, std::uint64_t> tally;
    for_each_subset_mask(g, limit, [&](std::uint64_t mask) {
        ++tally[{detail::profile_mask(g, mask), static_cast<std::uint32_t>(std::popcount(mask))}];
    });
    SparsePoly out(uprime_variables(n));
    for (const auto& [key, count] : tally) {
        Exponents exps = key.first;
        exps.push_back(key.second);
        out.add_term(std::move(exps), count);
    }
    return out;
}

/// Forest form: only the externally active edges collapse, into (1+y)^{e(F)};
/// internal deletions are summed explicitly.
inline SparsePoly uprime_forest(const Multigraph& g, const EdgeOrder& ord) {
    const auto n = g.vertex_count();
    const auto vars = uprime_variables(n);
    std::map<std::tuple<std::vector<std::uint32_t>, std::uint32_t, std::uint32_t>, std::uint64_t> tally;
    detail::for_each_internal_deletion(g, ord, false, [&](const EdgeSubset& forest, const EdgeSubset& deletions,
                                                          std::size_t external) {
        auto a = forest - deletions;
        ++tally[{detail::profile_of(g, a), static_cast<std::uint32_t>(a.size()),
                 static_cast<std::uint32_t>(external)}];
    });
    const auto one_plus_y = detail::linear("y", 1, 1).over(vars);
    std::size_t top = 0;
    for (const auto& [key, count] : tally) top = std::max<std::size_t>(top, std::get<2>(key));
    const auto growth = detail::powers_of(one_plus_y, top);
    SparsePoly out(vars);
    for (const auto& [key, count] : tally) {
        Exponents exps = std::get<0>(key);
        exps.push_back(std::get<1>(key));
        out += SparsePoly::monomial(vars, std::move(exps), count) * growth[std::get<2>(key)];
    }
    return out;
}

}  // namespace forge

#endif  // ACTIVITY_FORGE_INVARIANTS_HPP
