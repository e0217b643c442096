#pragma once

#include <stdexcept>
#include <string>

namespace qdha {

// Bad command-line input, unknown labels, malformed instance files.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters violating the axioms of an order function.
struct InvalidParameter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A normal-form peel left a genuine denominator.
struct NotInAlgebra : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonTerminating : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WindowTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IncompleteExploration : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic invariants that can only fail through a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace qdha
