#pragma once

#include <stdexcept>
#include <string>

namespace rhcodec {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operand shapes or index ranges do not match.
struct dimension_error : error {
    using error::error;
};

// Field construction or arithmetic failure (composite modulus, inverse of zero).
struct field_error : error {
    using error::error;
};

struct division_by_zero : field_error {
    division_by_zero() : field_error("division by zero field element") {}
};

// Realization validation failures.
struct not_controllable : error {
    not_controllable() : error("realization is not controllable") {}
};

struct not_observable : error {
    not_observable() : error("realization is not observable") {}
};

// An enumeration (codeword sweep, syndrome table, DP state space) would
// exceed the configured budget.
struct budget_exceeded : error {
    using error::error;
};

// Malformed input file.
struct parse_error : error {
    using error::error;
};

// A hard runtime invariant failed (decoder emitted a non-codeword, proved
// cost bound violated, ...). CLI maps this to a distinct exit code.
struct invariant_violation : error {
    using error::error;
};

} // namespace rhcodec
