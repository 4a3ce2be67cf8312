#pragma once

#include <stdexcept>
#include <string>

namespace latmix {

// Malformed or invalid input documents.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mathematical precondition of an operation does not hold for the input.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured resource cap (subset enumeration, lattice point box) was hit.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violation of an internal invariant that is a theorem; indicates a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace latmix
