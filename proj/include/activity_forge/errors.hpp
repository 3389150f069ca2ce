#ifndef ACTIVITY_FORGE_ERRORS_HPP
#define ACTIVITY_FORGE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace forge {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidGraph : Error {
    using Error::Error;
};

/// An edge subset does not belong to the graph it is used with.
struct InvalidSubset : Error {
    using Error::Error;
};

struct InvalidOrder : Error {
    using Error::Error;
};

/// Activities are only defined relative to a spanning forest.
struct NotSpanningForest : Error {
    using Error::Error;
};

/// An exhaustive 2^m enumeration was requested beyond the configured limit.
struct GuardExceeded : Error {
    GuardExceeded(std::size_t edges, std::size_t limit)
        : Error("exhaustive enumeration refused: " + std::to_string(edges) +
                " edges exceeds limit " + std::to_string(limit)),
          edges(edges),
          limit(limit) {}

    std::size_t edges;
    std::size_t limit;
};

struct MissingVariable : Error {
    explicit MissingVariable(const std::string& name)
        : Error("no value assigned to variable '" + name + "'"), name(name) {}

    std::string name;
};

struct ParseError : Error {
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}

    std::size_t line;
};

}  // namespace forge

#endif  // ACTIVITY_FORGE_ERRORS_HPP
