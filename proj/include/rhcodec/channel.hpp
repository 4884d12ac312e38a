#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rhcodec/conv_code.hpp"

namespace rhcodec {

// One additive error: value added to coordinate `coord` of the symbol at time
// `t`.  Coordinates number the y part first (0..n-k-1), then the u part.
struct ErrorEntry {
    std::size_t t = 0;
    std::size_t coord = 0;
    Elem value = 0;
};

enum class ChannelKind {
    none,
    q_symmetric,     // each coordinate independently replaced by a uniform
                     // different symbol with probability p_err
    per_window,      // exactly `weight` corrupted coordinates in each window
                     // of `stride` consecutive time steps
    explicit_errors, // a fixed list of additive errors
};

struct ChannelSpec {
    ChannelKind kind = ChannelKind::none;
    double p_err = 0.0;                // q_symmetric
    std::size_t weight = 0;            // per_window
    std::size_t stride = 1;            // per_window
    std::vector<ErrorEntry> errors;    // explicit_errors
};

ChannelKind channel_kind_from_name(const std::string& name);
std::string channel_kind_name(ChannelKind kind);

// Applies the channel to a symbol sequence, deterministically in `seed`.
// Returns the corrupted sequence together with the error entries actually
// introduced (canonical order: time ascending, then coordinate ascending).
struct ChannelResult {
    SymbolSeq seq;
    std::vector<ErrorEntry> errors;
};

ChannelResult apply_channel(const Field& f, const SymbolSeq& sent, const ChannelSpec& spec,
                            std::uint64_t seed);

} // namespace rhcodec
