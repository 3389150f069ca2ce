#ifndef ACTIVITY_FORGE_POLY_JSON_HPP
#define ACTIVITY_FORGE_POLY_JSON_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "activity_forge/errors.hpp"
#include "activity_forge/poly.hpp"

namespace forge {

/// {"vars":[...],"terms":[{"coef":"<decimal>","exp":[...]}, ...]}, terms in
/// descending graded lexicographic order.
inline nlohmann::ordered_json poly_to_json(const SparsePoly& p) {
    nlohmann::ordered_json doc;
    doc["vars"] = p.variables();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [exps, c] : graded_terms(p)) {
        nlohmann::ordered_json term;
        term["coef"] = c.str();
        term["exp"] = exps;
        terms.push_back(std::move(term));
    }
    doc["terms"] = std::move(terms);
    return doc;
}

inline SparsePoly poly_from_json(const nlohmann::ordered_json& doc) {
    try {
        SparsePoly p(doc.at("vars").get<std::vector<std::string>>());
        for (const auto& term : doc.at("terms")) {
            auto coef = term.at("coef").get<std::string>();
            p.add_term(term.at("exp").get<Exponents>(), Integer(coef));
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed polynomial document: ") + e.what());
    } catch (const std::runtime_error& e) {
        throw Error(std::string("malformed polynomial coefficient: ") + e.what());
    }
}

}  // namespace forge

#endif  // ACTIVITY_FORGE_POLY_JSON_HPP
