#ifndef ACTIVITY_FORGE_POLY_HPP
#define ACTIVITY_FORGE_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "activity_forge/errors.hpp"
#include "activity_forge/numbers.hpp"

namespace forge {

using Exponents = std::vector<std::uint32_t>;

/// Exact sparse polynomial over named variables with big-integer coefficients.
///
/// Terms are keyed by exponent vectors aligned with `variables()`. Zero
/// coefficients are never stored, so two polynomials over the same variable
/// list are equal iff their term maps are identical. Binary operations merge
/// the variable lists by name: the left operand's variables come first, then
/// any new ones from the right.
class SparsePoly {
public:
    using TermMap = std::map<Exponents, Integer>;

    SparsePoly() = default;
    explicit SparsePoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

    static SparsePoly constant(const Integer& c, std::vector<std::string> variables = {}) {
        SparsePoly p(std::move(variables));
        p.add_term(Exponents(p.vars_.size(), 0), c);
        return p;
    }

    static SparsePoly variable(const std::string& name) {
        SparsePoly p({name});
        p.add_term({1}, 1);
        return p;
    }

    static SparsePoly monomial(std::vector<std::string> variables, Exponents exps, const Integer& c = 1) {
        SparsePoly p(std::move(variables));
        p.add_term(std::move(exps), c);
        return p;
    }

    [[nodiscard]] const std::vector<std::string>& variables() const noexcept { return vars_; }
    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }

    [[nodiscard]] Integer coefficient(const Exponents& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(Exponents exps, const Integer& c) {
        if (exps.size() != vars_.size()) throw Error("exponent vector does not match variable count");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(exps), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Same polynomial over `variables`, which must name every variable that occurs.
    [[nodiscard]] SparsePoly over(const std::vector<std::string>& variables) const {
        std::vector<std::size_t> target(vars_.size());
        std::vector<bool> mapped(vars_.size(), false);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(variables.begin(), variables.end(), vars_[i]);
            if (it != variables.end()) {
                target[i] = static_cast<std::size_t>(it - variables.begin());
                mapped[i] = true;
            }
        }
        SparsePoly out(variables);
        for (const auto& [exps, c] : terms_) {
            Exponents moved(variables.size(), 0);
            for (std::size_t i = 0; i < exps.size(); ++i) {
                if (exps[i] == 0) continue;
                if (!mapped[i]) throw Error("variable '" + vars_[i] + "' missing from target variable list");
                moved[target[i]] = exps[i];
            }
            out.add_term(std::move(moved), c);
        }
        return out;
    }

    SparsePoly& operator+=(const SparsePoly& q) {
        if (q.vars_ != vars_) {
            auto merged = merged_variables(vars_, q.vars_);
            if (merged != vars_) *this = over(merged);
            for (const auto& [exps, c] : q.over(merged).terms_) add_term(exps, c);
            return *this;
        }
        for (const auto& [exps, c] : q.terms_) add_term(exps, c);
        return *this;
    }

    SparsePoly& operator-=(const SparsePoly& q) { return *this += -q; }
    SparsePoly& operator*=(const SparsePoly& q) { return *this = *this * q; }

    SparsePoly& operator*=(const Integer& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [exps, coef] : terms_) coef *= c;
        }
        return *this;
    }

    friend SparsePoly operator-(SparsePoly p) {
        for (auto& [exps, c] : p.terms_) c = -c;
        return p;
    }

    friend SparsePoly operator+(SparsePoly p, const SparsePoly& q) { return p += q; }
    friend SparsePoly operator-(SparsePoly p, const SparsePoly& q) { return p -= q; }

    friend SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) {
        auto merged = merged_variables(p.vars_, q.vars_);
        const auto& a = p.vars_ == merged ? p : p.over(merged);
        const auto qq = q.over(merged);
        SparsePoly out(merged);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : qq.terms_) {
                Exponents e(merged.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        }
        return out;
    }

    friend SparsePoly operator*(SparsePoly p, const Integer& c) { return p *= c; }
    friend SparsePoly operator*(const Integer& c, SparsePoly p) { return p *= c; }

    /// Equality as polynomials; the variable lists may differ in order or in
    /// variables that do not occur.
    friend bool operator==(const SparsePoly& p, const SparsePoly& q) {
        if (p.vars_ == q.vars_) return p.terms_ == q.terms_;
        auto merged = merged_variables(p.vars_, q.vars_);
        return p.over(merged).terms_ == q.over(merged).terms_;
    }

    static std::vector<std::string> merged_variables(const std::vector<std::string>& a,
                                                     const std::vector<std::string>& b) {
        auto out = a;
        for (const auto& v : b) {
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        }
        return out;
    }

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

inline SparsePoly add(const SparsePoly& p, const SparsePoly& q) { return p + q; }
inline SparsePoly mul(const SparsePoly& p, const SparsePoly& q) { return p * q; }
inline SparsePoly scale(const SparsePoly& p, const Integer& c) { return p * c; }

/// p^k by repeated squaring; p^0 is the constant 1 over p's variables.
inline SparsePoly pow(const SparsePoly& p, std::uint64_t k) {
    auto result = SparsePoly::constant(1, p.variables());
    auto base = p;
    while (k != 0) {
        if (k & 1U) result *= base;
        k >>= 1;
        if (k != 0) base *= base;
    }
    return result;
}

/// Terms in descending graded lexicographic order of exponent vectors.
inline std::vector<std::pair<Exponents, Integer>> graded_terms(const SparsePoly& p) {
    std::vector<std::pair<Exponents, Integer>> out(p.terms().begin(), p.terms().end());
    auto degree = [](const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::uint64_t{0}); };
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        auto da = degree(a.first);
        auto db = degree(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    return out;
}

using Assignment = std::map<std::string, Rational>;

/// Exact evaluation; every declared variable must be assigned.
inline Rational eval(const SparsePoly& p, const Assignment& values) {
    std::vector<Rational> point;
    point.reserve(p.variables().size());
    for (const auto& v : p.variables()) {
        auto it = values.find(v);
        if (it == values.end()) throw MissingVariable(v);
        point.push_back(it->second);
    }
    Rational total = 0;
    for (const auto& [exps, c] : p.terms()) {
        Rational term = Rational(c);
        for (std::size_t i = 0; i < exps.size(); ++i) {
            for (std::uint32_t k = 0; k < exps[i]; ++k) term *= point[i];
        }
        total += term;
    }
    return total;
}

/// Replaces `name` by `value` throughout p.
inline SparsePoly substitute(const SparsePoly& p, const std::string& name, const SparsePoly& value) {
    const auto& vars = p.variables();
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) return p;
    const auto slot = static_cast<std::size_t>(it - vars.begin());
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i != slot) rest.push_back(vars[i]);
    }
    SparsePoly out(SparsePoly::merged_variables(rest, value.variables()));
    std::map<std::uint32_t, SparsePoly> powers;
    for (const auto& [exps, c] : p.terms()) {
        Exponents kept;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (i != slot) kept.push_back(exps[i]);
        }
        auto [pw, fresh] = powers.try_emplace(exps[slot]);
        if (fresh) pw->second = pow(value, exps[slot]);
        out += SparsePoly::monomial(rest, std::move(kept), c) * pw->second;
    }
    return out;
}

/// Human-readable form, e.g. "x^2 + x + y".
inline std::string to_string(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, c] : graded_terms(p)) {
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool has_var = std::any_of(exps.begin(), exps.end(), [](auto e) { return e != 0; });
        bool wrote = false;
        if (mag != 1 || !has_var) {
            os << mag;
            wrote = true;
        }
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (wrote) os << "*";
            os << p.variables()[i];
            if (exps[i] != 1) os << "^" << exps[i];
            wrote = true;
        }
    }
    return os.str();
}

}  // namespace forge

#endif  // ACTIVITY_FORGE_POLY_HPP
