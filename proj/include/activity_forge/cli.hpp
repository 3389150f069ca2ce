#ifndef ACTIVITY_FORGE_CLI_HPP
#define ACTIVITY_FORGE_CLI_HPP

// Command-line driver. Every run prints one JSON document on `out`.
//
// Exit codes: 0 success, 2 bad input (usage, parse, invalid subset or
// assignment), 3 exhaustive guard exceeded, 4 a verification failed
// (representation mismatch, partition violation, round-trip failure).

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "activity_forge/activity.hpp"
#include "activity_forge/bijection.hpp"
#include "activity_forge/errors.hpp"
#include "activity_forge/graph.hpp"
#include "activity_forge/graph_io.hpp"
#include "activity_forge/invariants.hpp"
#include "activity_forge/poly.hpp"
#include "activity_forge/poly_json.hpp"

namespace forge::cli {

inline constexpr const char* kSchema = "activity-forge/1";

enum ExitCode : int {
    exit_ok = 0,
    exit_input = 2,
    exit_guard = 3,
    exit_mismatch = 4,
};

using Json = nlohmann::ordered_json;

struct UsageError : Error {
    using Error::Error;
};

struct Options {
    std::string command;
    std::string graph_path;
    std::string rep = "forest";
    std::optional<std::string> order;
    std::optional<std::string> subset;
    std::optional<std::string> eval;
    std::size_t max_exhaustive = kDefaultExhaustiveLimit;
};

inline std::vector<std::string> commands() {
    return {"tutte", "chromatic", "reliability", "sgf", "uprime", "activities", "classify", "verify"};
}

/// "random:<seed>" or a list of edge ids from smallest to largest.
inline EdgeOrder parse_order_flag(const std::string& text, std::size_t m) {
    constexpr std::string_view prefix = "random:";
    if (text.rfind(prefix, 0) == 0) {
        auto seed = detail::parse_uints(std::string_view(text).substr(prefix.size()));
        if (!seed || seed->size() != 1) throw UsageError("malformed --order seed: " + text);
        return EdgeOrder::random(m, seed->front());
    }
    auto ids = detail::parse_uints(text);
    if (!ids) throw UsageError("malformed --order: " + text);
    if (ids->size() != m) {
        throw UsageError("--order lists " + std::to_string(ids->size()) + " edges, graph has " + std::to_string(m));
    }
    std::vector<EdgeId> seq(ids->begin(), ids->end());
    return EdgeOrder::from_sequence(seq);
}

inline Rational parse_rational(std::string_view text) {
    auto s = detail::trim(text);
    auto valid_integer = [](std::string_view part) {
        if (!part.empty() && (part.front() == '-' || part.front() == '+')) part.remove_prefix(1);
        return !part.empty() && std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto slash = s.find('/');
    auto num = s.substr(0, slash);
    auto den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den)) throw UsageError("malformed rational: " + std::string(text));
    const Integer d{std::string(den)};
    if (d == 0) throw UsageError("zero denominator: " + std::string(text));
    return Rational(Integer{std::string(num)}, d);
}

/// "x=3,p=1/2".
inline Assignment parse_assignment(const std::string& text) {
    Assignment values;
    std::string_view rest(text);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        auto item = detail::trim(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string_view::npos) throw UsageError("expected var=value in --eval: " + std::string(item));
        values[std::string(detail::trim(item.substr(0, eq)))] = parse_rational(item.substr(eq + 1));
    }
    return values;
}

inline std::string rational_string(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline Json ids_json(const EdgeSubset& s) { return Json(s.ids()); }

namespace detail {

struct Representation {
    std::string name;
    std::function<SparsePoly()> compute;
};

inline std::vector<Representation> representations(const std::string& command, const Multigraph& g,
                                                    const EdgeOrder& ord, std::size_t limit) {
    if (command == "tutte") {
        return {{"forest", [&] { return tutte_forest(g, ord); }},
                {"subset", [&, limit] { return tutte_subset(g, limit); }}};
    }
    if (command == "chromatic") {
        return {{"forest", [&] { return chromatic_forest(g, ord); }},
                {"subset", [&, limit] { return chromatic_subset(g, limit); }},
                {"broken-cycle", [&] { return chromatic_broken_cycle(g, ord); }}};
    }
    if (command == "reliability") {
        return {{"forest", [&] { return reliability_tree(g, ord); }},
                {"subset", [&, limit] { return reliability_subset(g, limit); }}};
    }
    if (command == "sgf") {
        return {{"forest", [&] { return connected_gf_tree(g, ord); }},
                {"subset", [&, limit] { return connected_gf_subset(g, limit); }}};
    }
    return {{"forest", [&] { return uprime_forest(g, ord); }},
            {"subset", [&, limit] { return uprime_subset(g, limit); }}};
}

/// Records every representation under "representations" and each one that
/// differs from the first under "mismatches" with the difference polynomial.
inline int compare_representations(const std::vector<std::pair<std::string, SparsePoly>>& results, Json& doc) {
    const auto& [first_name, first] = results.front();
    Json all;
    Json mismatches = Json::array();
    for (const auto& [name, p] : results) {
        all[name] = poly_to_json(p);
        if (!(p == first)) {
            Json diff;
            diff["a"] = first_name;
            diff["b"] = name;
            diff["difference"] = poly_to_json(first - p);
            mismatches.push_back(std::move(diff));
        }
    }
    doc["representations"] = std::move(all);
    doc["match"] = mismatches.empty();
    if (mismatches.empty()) return exit_ok;
    doc["mismatches"] = std::move(mismatches);
    return exit_mismatch;
}

inline int polynomial_command(const Options& opt, const Multigraph& g, const EdgeOrder& ord, Json& doc) {
    auto reps = representations(opt.command, g, ord, opt.max_exhaustive);
    std::vector<Representation> chosen;
    for (auto& r : reps) {
        if (opt.rep == "all" || opt.rep == r.name) chosen.push_back(r);
    }
    if (chosen.empty()) throw UsageError("representation '" + opt.rep + "' not available for " + opt.command);

    std::vector<std::pair<std::string, SparsePoly>> results;
    for (auto& r : chosen) results.emplace_back(r.name, r.compute());
    const auto& primary = results.front().second;

    doc["rep"] = opt.rep;
    doc["poly"] = poly_to_json(primary);
    doc["text"] = to_string(primary);
    const int code = opt.rep == "all" ? compare_representations(results, doc) : exit_ok;
    if (opt.eval) doc["value"] = rational_string(eval(primary, parse_assignment(*opt.eval)));
    return code;
}

inline int activities_command(const Multigraph& g, const EdgeOrder& ord, Json& doc) {
    Json forests = Json::array();
    for_each_forest_activity(g, ord, [&](const EdgeSubset& forest, const EdgeSubset& internal,
                                         const EdgeSubset& external) {
        Json item;
        item["forest"] = ids_json(forest);
        item["internal"] = ids_json(internal);
        item["external"] = ids_json(external);
        forests.push_back(std::move(item));
    });
    doc["count"] = forests.size();
    doc["forests"] = std::move(forests);
    return exit_ok;
}

inline int classify_command(const Options& opt, const Multigraph& g, const EdgeOrder& ord, Json& doc) {
    if (!opt.subset) throw UsageError("classify requires --subset");
    auto ids = forge::detail::parse_uints(*opt.subset);
    if (!ids) throw UsageError("malformed --subset: " + *opt.subset);
    std::vector<EdgeId> members;
    for (auto id : *ids) {
        if (id >= g.edge_count()) throw InvalidSubset("edge id " + std::to_string(id) + " out of range");
        members.push_back(static_cast<EdgeId>(id));
    }
    auto a = EdgeSubset::from_ids(g.edge_count(), members);
    auto t = classify(g, ord, a);
    const bool roundtrip = expand(g, ord, t) == a;
    doc["subset"] = ids_json(a);
    doc["forest"] = ids_json(t.forest);
    doc["deletions"] = ids_json(t.deletions);
    doc["additions"] = ids_json(t.additions);
    doc["roundtrip"] = roundtrip ? "ok" : "failed";
    return roundtrip ? exit_ok : exit_mismatch;
}

inline int verify_command(const Options& opt, const Multigraph& g, const EdgeOrder& ord, Json& doc) {
    auto report = verify_partition(g, ord, opt.max_exhaustive);
    const bool identity = activity_count_identity(g, ord);
    bool independent = true;
    std::size_t pairs = 0;
    Json violation;
    for_each_spanning_forest(g, [&](const EdgeSubset& forest) {
        auto check = check_independence(g, ord, forest);
        pairs += check.pairs_checked;
        if (!check.passed && independent) {
            independent = false;
            violation["forest"] = ids_json(forest);
            violation["internal"] = check.violation->first;
            violation["external"] = check.violation->second;
        }
    });

    doc["partition"] = report.ok() ? "ok" : "violated";
    doc["covered"] = report.covered;
    doc["expected"] = report.expected;
    doc["triples"] = report.triples;
    doc["identity_2E"] = identity;
    doc["independence"] = independent ? "ok" : "violated";
    doc["independence_pairs"] = pairs;
    Json per_forest = Json::array();
    for (const auto& f : report.forests) {
        Json item;
        item["forest"] = ids_json(f.forest);
        item["i"] = f.internal;
        item["e"] = f.external;
        item["covered"] = f.covered;
        per_forest.push_back(std::move(item));
    }
    doc["forests"] = std::move(per_forest);
    if (report.duplicate) doc["duplicate"] = ids_json(*report.duplicate);
    if (report.missing) doc["missing"] = ids_json(*report.missing);
    if (!independent) doc["independence_violation"] = std::move(violation);
    return report.ok() && identity && independent ? exit_ok : exit_mismatch;
}

inline std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open graph file: " + path);
    buffer << in.rdbuf();
    return buffer.str();
}

inline Json error_json(const std::string& kind, const std::string& message) {
    Json doc;
    doc["schema"] = kSchema;
    doc["error"] = {{"kind", kind}, {"message", message}};
    return doc;
}

}  // namespace detail

inline int execute(const Options& opt, std::ostream& out) {
    const auto text = detail::read_input(opt.graph_path);
    const auto parsed = parse_graph(text);
    const auto g = parsed.graph();
    const auto ord = opt.order ? parse_order_flag(*opt.order, g.edge_count()) : parsed.edge_order();

    Json doc;
    doc["schema"] = kSchema;
    doc["command"] = opt.command;
    Json graph;
    if (parsed.name) graph["name"] = *parsed.name;
    graph["vertices"] = g.vertex_count();
    graph["edges"] = g.edge_count();
    doc["graph"] = std::move(graph);
    doc["order"] = std::vector<EdgeId>(ord.sequence().begin(), ord.sequence().end());

    int code = exit_ok;
    if (opt.command == "activities") {
        code = detail::activities_command(g, ord, doc);
    } else if (opt.command == "classify") {
        code = detail::classify_command(opt, g, ord, doc);
    } else if (opt.command == "verify") {
        code = detail::verify_command(opt, g, ord, doc);
    } else {
        code = detail::polynomial_command(opt, g, ord, doc);
    }
    out << doc.dump(2) << "\n";
    return code;
}

/// Entry point; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spanning-forest activities, the subset bijection, and graph polynomials", "activity_forge"};
    Options opt;
    app.add_option("command", opt.command, "tutte | chromatic | reliability | sgf | uprime | activities | classify | verify")
        ->required()
        ->check(CLI::IsMember(commands()));
    app.add_option("graph", opt.graph_path, "edge-list graph file, or - for stdin")->required();
    app.add_option("--rep", opt.rep, "forest | subset | broken-cycle | all")
        ->check(CLI::IsMember({"forest", "subset", "broken-cycle", "all"}));
    app.add_option("--order", opt.order, "edge ids from smallest to largest, or random:<seed>");
    app.add_option("--subset", opt.subset, "edge ids of the subset to classify");
    app.add_option("--eval", opt.eval, "evaluate the result, e.g. p=1/2 or x=3,y=2");
    app.add_option("--max-exhaustive", opt.max_exhaustive, "largest edge count for 2^m enumeration");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        out << detail::error_json("usage", e.what()).dump(2) << "\n";
        return exit_input;
    }

    auto fail = [&](const char* kind, const std::exception& e, int code) {
        err << "error: " << e.what() << "\n";
        out << detail::error_json(kind, e.what()).dump(2) << "\n";
        return code;
    };
    try {
        return execute(opt, out);
    } catch (const GuardExceeded& e) {
        return fail("guard", e, exit_guard);
    } catch (const ParseError& e) {
        return fail("parse", e, exit_input);
    } catch (const MissingVariable& e) {
        return fail("missing-variable", e, exit_input);
    } catch (const Error& e) {
        return fail("input", e, exit_input);
    }
}

}  // namespace forge::cli

#endif  // ACTIVITY_FORGE_CLI_HPP
