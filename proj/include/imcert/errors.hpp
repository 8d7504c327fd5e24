#pragma once

#include <stdexcept>
#include <string>

namespace imcert {

// Error classes map to CLI exit codes: input 2, precondition 3, internal 4.

// Unreadable/malformed input: graph files, reports, manifests, rationals.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition of an operation does not hold for the given
// instance (degree too high, 3-regular component, oracle cap, ...).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// A runtime-checked invariant of a construction failed. Never expected on
// valid inputs; always a bug or a broken instance slipping past checks.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

enum class ParseErrorKind {
    malformed_line,
    duplicate_edge,
    loop,
    vertex_out_of_range,
};

struct ParseError : InputError {
    ParseErrorKind kind;
    int line;  // 1-based, 0 if not tied to a line

    ParseError(ParseErrorKind k, int ln, const std::string& what)
        : InputError(what), kind(k), line(ln) {}
};

}  // namespace imcert
