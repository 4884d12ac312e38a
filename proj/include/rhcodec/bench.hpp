#pragma once

#include <cstdint>

#include "rhcodec/budget.hpp"
#include "rhcodec/conv_code.hpp"

namespace rhcodec {

struct BenchResult {
    std::size_t reps = 0;
    std::size_t horizon_T = 0;
    bool exact_run = false;
    double heuristic_median_us = 0.0;
    double exact_median_us = 0.0;
    long heuristic_total_cost = 0;
    long exact_total_cost = 0;
};

// Times the receding-horizon decoder against the exact DP decoder on the same
// randomly corrupted frames (window table construction is not timed; the DP
// decoder's per-call table setup is, since it has no reusable state).  Each
// timed call is preceded by an untimed warm-up call of the same decoder on
// the same frame, so the medians report steady-state latency.  With
// run_exact = false only the heuristic rows are measured.
BenchResult bench_decoders(const ConvCode& code, std::size_t T, std::size_t N, std::size_t L,
                           std::size_t reps, double p_err, std::uint64_t seed,
                           const Budget& budget = {}, bool run_exact = true);

} // namespace rhcodec
