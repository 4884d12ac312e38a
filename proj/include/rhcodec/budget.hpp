#pragma once

#include <cstdint>
#include <string>

#include "rhcodec/errors.hpp"

namespace rhcodec {

// Cap on exhaustive enumerations (codeword sweeps, syndrome tables, DP state
// spaces). Overridable per call, via the CLI --budget flag, or the
// RHCODEC_BUDGET environment variable.
struct Budget {
    std::uint64_t max_enumeration = std::uint64_t{1} << 24;

    void check(std::uint64_t need, const char* what) const {
        if (need > max_enumeration)
            throw budget_exceeded(std::string(what) + ": needs " + std::to_string(need) +
                                  " > budget " + std::to_string(max_enumeration));
    }
};

// p^e with overflow saturation (anything past 2^63 is far over any budget).
inline std::uint64_t checked_pow(std::uint64_t p, std::uint64_t e) {
    std::uint64_t r = 1;
    const std::uint64_t cap = std::uint64_t{1} << 63;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > cap / p) return cap;
        r *= p;
    }
    return r;
}

} // namespace rhcodec
