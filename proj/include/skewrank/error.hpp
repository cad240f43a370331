#pragma once

#include <stdexcept>
#include <string>

namespace skewrank {

/// Malformed text input. `kind` distinguishes the diagnostic.
class ParseError : public std::runtime_error {
public:
    enum class Kind { MalformedHeader, MalformedLine, VertexOutOfRange, DuplicateEdge, Loop, BadGraph6 };

    ParseError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// A structural invariant of a graph was violated at construction time.
class GraphError : public std::invalid_argument {
public:
    enum class Kind { Loop, DuplicateEdge, VertexOutOfRange, Disconnected };

    GraphError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// The input graph has a shape the requested operation does not handle.
class UnsupportedShape : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A brute-force routine was asked to go beyond its size cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent routes to the same quantity disagreed. Never recovered from.
class InternalContradiction : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace skewrank
