#ifndef ACTIVITY_FORGE_GRAPH_IO_HPP
#define ACTIVITY_FORGE_GRAPH_IO_HPP

// Edge-list text format:
//
//     # comment
//     name: triangle        (optional)
//     3                     first data line: vertex count
//     0 1                   one edge per line; "u u" is a loop,
//     1 2                   repeated lines are parallel edges
//     0 2
//     order: 2 0 1          (optional) edge ids from smallest to largest
//
// Edge ids are assigned in file order.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "activity_forge/activity.hpp"
#include "activity_forge/errors.hpp"
#include "activity_forge/graph.hpp"

namespace forge {

struct GraphDocument {
    std::size_t vertex_count = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::optional<std::vector<EdgeId>> order;
    std::optional<std::string> name;

    [[nodiscard]] Multigraph graph() const { return Multigraph(vertex_count, edges); }

    /// The explicit order if present, else file order.
    [[nodiscard]] EdgeOrder edge_order() const {
        return order ? EdgeOrder::from_sequence(*order) : EdgeOrder::identity(edges.size());
    }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// Whitespace- or comma-separated nonnegative integers; nullopt on any junk.
inline std::optional<std::vector<std::uint64_t>> parse_uints(std::string_view s) {
    std::vector<std::uint64_t> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const auto c = s[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
            continue;
        }
        std::uint64_t value = 0;
        auto [end, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
        if (ec != std::errc{} || end == s.data() + i) return std::nullopt;
        const auto next = static_cast<std::size_t>(end - s.data());
        if (next < s.size() && !std::isspace(static_cast<unsigned char>(s[next])) && s[next] != ',') {
            return std::nullopt;
        }
        out.push_back(value);
        i = next;
    }
    return out;
}

inline bool starts_with_key(std::string_view line, std::string_view key, std::string_view& rest) {
    if (line.substr(0, key.size()) != key) return false;
    rest = trim(line.substr(key.size()));
    return true;
}

}  // namespace detail

inline GraphDocument parse_graph(std::string_view text) {
    GraphDocument doc;
    bool have_count = false;
    std::size_t order_line = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        auto line = detail::trim(raw);
        if (line.empty()) continue;

        std::string_view rest;
        if (detail::starts_with_key(line, "name:", rest)) {
            doc.name = std::string(rest);
            continue;
        }
        if (detail::starts_with_key(line, "order:", rest)) {
            auto ids = detail::parse_uints(rest);
            if (!ids) throw ParseError(line_no, "malformed order line");
            if (doc.order) throw ParseError(line_no, "order given twice");
            doc.order.emplace(ids->begin(), ids->end());
            order_line = line_no;
            continue;
        }

        auto numbers = detail::parse_uints(line);
        if (!have_count) {
            if (!numbers || numbers->size() != 1) throw ParseError(line_no, "expected vertex count");
            doc.vertex_count = static_cast<std::size_t>(numbers->front());
            have_count = true;
            continue;
        }
        if (!numbers || numbers->size() != 2) throw ParseError(line_no, "expected edge \"u v\"");
        const auto u = (*numbers)[0];
        const auto v = (*numbers)[1];
        if (u >= doc.vertex_count || v >= doc.vertex_count) {
            throw ParseError(line_no, "vertex index out of range for " + std::to_string(doc.vertex_count) +
                                          " vertices");
        }
        doc.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!have_count) throw ParseError(line_no, "missing vertex count");
    if (doc.order) {
        if (doc.order->size() != doc.edges.size()) {
            throw ParseError(order_line, "order lists " + std::to_string(doc.order->size()) + " edges, graph has " +
                                             std::to_string(doc.edges.size()));
        }
        try {
            (void)EdgeOrder::from_sequence(*doc.order);
        } catch (const InvalidOrder& e) {
            throw ParseError(order_line, e.what());
        }
    }
    return doc;
}

/// Writes a document back in the text format.
inline std::string format_graph(const GraphDocument& doc) {
    std::ostringstream os;
    if (doc.name) os << "name: " << *doc.name << "\n";
    os << doc.vertex_count << "\n";
    for (const auto& [u, v] : doc.edges) os << u << " " << v << "\n";
    if (doc.order) {
        os << "order:";
        for (auto id : *doc.order) os << " " << id;
        os << "\n";
    }
    return os.str();
}

}  // namespace forge

#endif  // ACTIVITY_FORGE_GRAPH_IO_HPP
