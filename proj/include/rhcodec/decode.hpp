#pragma once

#include <cstdint>
#include <vector>

#include "rhcodec/budget.hpp"
#include "rhcodec/conv_code.hpp"
#include "rhcodec/window_code.hpp"

namespace rhcodec {

struct HorizonParams {
    std::size_t N = 1;  // window length
    std::size_t L = 1;  // commit stride, 1 <= L <= N
};

struct TieEvent {
    std::size_t t;            // loop time of the window decode
    std::uint64_t tie_count;  // > 1
};

struct DecodeResult {
    std::vector<Vec> u;      // recovered inputs, zero-return extension included
    SymbolSeq codeword;      // re-encoded candidate; always a codeword
    long cost = 0;           // Hamming cost vs received over the full padded horizon
    long horizon_cost = 0;   // cost restricted to times 0..T-1 (the bounded quantity)
    std::size_t tau = 0;     // zero-return extension length
    std::vector<TieEvent> tie_events;   // window decodes with tie_count > 1
    std::vector<long> step_costs;       // window error weight per loop step
};

// Total Hamming cost sum_t [w(y_t - y'_t) + w(u_t - u'_t)]; the shorter
// sequence is zero-padded.
long cost(const SymbolSeq& a, const SymbolSeq& b);
// Same, restricted to times t < horizon.
long cost(const SymbolSeq& a, const SymbolSeq& b, std::size_t horizon);

// Per-decode guarantee of the receding-horizon loop: the cost accumulated
// over times 0..T-1 never exceeds ceil(T/L) * covering_radius.
long cost_bound(const WindowCode& wc, std::size_t T, std::size_t L);

/*
 * Receding-horizon tracking decoder. At t = 0, L, 2L, ... the window vector
 *
 *   z = (ytilde_{t+N-1} - C A^{N-1} x_t, ..., ytilde_t - C x_t,
 *        -utilde_{t+N-1},               ..., -utilde_t)
 *
 * is syndrome-decoded against the window code; negating the message part of
 * the chosen codeword gives the window's input estimate, the oldest L
 * inputs are committed, and the state advances through them. Received data
 * beyond T reads as zero. After the last step the state is steered to zero
 * by the minimal zero-return extension.
 */
DecodeResult receding_horizon_decode(const ConvCode& code, const SymbolSeq& received,
                                     const HorizonParams& params, const Budget& budget = {});
// Same, reusing a prebuilt window code (wc.window() = N).
DecodeResult receding_horizon_decode(const WindowCode& wc, const SymbolSeq& received,
                                     std::size_t L, const Budget& budget = {});

/*
 * Exact maximum-likelihood reference decoder: backward dynamic program over
 * stages t = 0..T+kappa_max on the full state space with the terminal state
 * pinned to zero; stage cost w(u - utilde_t) + w(C x + D u - ytilde_t) with
 * received data zero-padded beyond T. Ties at each argmin break toward the
 * lexicographically smallest input, making the result deterministic. Finds
 * a global minimum-cost codeword among those of degree <= T+kappa_max.
 */
DecodeResult exact_decode(const ConvCode& code, const SymbolSeq& received,
                          const Budget& budget = {});

} // namespace rhcodec
