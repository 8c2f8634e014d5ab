#pragma once

#include <stdexcept>
#include <string>

namespace leibcoh {

// Malformed user input: algebra files, rational literals, CLI arguments.
// Surfaces as exit code 2 at the CLI boundary.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A structurally valid input that violates an operation's precondition,
// e.g. requesting Lie cohomology of an algebra whose bracket is not Lie.
// Surfaces as exit code 3 at the CLI boundary.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace leibcoh
