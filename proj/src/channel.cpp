#include "rhcodec/channel.hpp"

#include <algorithm>

#include "rhcodec/errors.hpp"
#include "rhcodec/rng.hpp"

namespace rhcodec {

ChannelKind channel_kind_from_name(const std::string& name) {
    if (name == "none") return ChannelKind::none;
    if (name == "q_symmetric") return ChannelKind::q_symmetric;
    if (name == "per_window") return ChannelKind::per_window;
    if (name == "explicit") return ChannelKind::explicit_errors;
    throw parse_error("unknown channel kind: " + name);
}

std::string channel_kind_name(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::none: return "none";
        case ChannelKind::q_symmetric: return "q_symmetric";
        case ChannelKind::per_window: return "per_window";
        case ChannelKind::explicit_errors: return "explicit";
    }
    return "none";
}

namespace {

Elem& coord_ref(SymbolSeq& seq, std::size_t t, std::size_t coord) {
    std::size_t ny = seq.y[t].size();
    if (coord < ny) return seq.y[t][coord];
    std::size_t cu = coord - ny;
    if (cu >= seq.u[t].size()) throw dimension_error("error coordinate out of range");
    return seq.u[t][cu];
}

void add_error(const Field& f, ChannelResult& res, std::size_t t, std::size_t coord, Elem value) {
    if (value == 0) return;
    Elem& c = coord_ref(res.seq, t, coord);
    c = f.add(c, value);
    res.errors.push_back(ErrorEntry{t, coord, f.norm(value)});
}

ChannelResult apply_q_symmetric(const Field& f, const SymbolSeq& sent, double p_err,
                                std::uint64_t seed) {
    ChannelResult res;
    res.seq = sent;
    SplitMix64 rng(seed);
    std::uint32_t thr = prob_to_threshold(p_err);
    std::size_t T1 = sent.length();
    std::size_t per_symbol = (T1 ? sent.y[0].size() + sent.u[0].size() : 0);
    for (std::size_t t = 0; t < T1; ++t)
        for (std::size_t c = 0; c < per_symbol; ++c)
            if (rng.flip(thr)) {
                // Uniform over the p-1 values that actually change the symbol.
                Elem delta = static_cast<Elem>(rng.below(static_cast<std::uint64_t>(f.p() - 1))) + 1;
                add_error(f, res, t, c, delta);
            }
    return res;
}

ChannelResult apply_per_window(const Field& f, const SymbolSeq& sent, std::size_t weight,
                               std::size_t stride, std::uint64_t seed) {
    if (stride == 0) throw dimension_error("per_window channel needs stride >= 1");
    ChannelResult res;
    res.seq = sent;
    SplitMix64 rng(seed);
    std::size_t T1 = sent.length();
    std::size_t per_symbol = (T1 ? sent.y[0].size() + sent.u[0].size() : 0);
    for (std::size_t start = 0; start < T1; start += stride) {
        std::size_t len = std::min(stride, T1 - start);
        std::size_t slots = len * per_symbol;
        if (weight > slots)
            throw dimension_error("per_window channel: weight exceeds window size");
        // Choose `weight` distinct coordinate slots in this window.
        std::vector<std::size_t> chosen;
        while (chosen.size() < weight) {
            std::size_t pick = static_cast<std::size_t>(rng.below(slots));
            if (std::find(chosen.begin(), chosen.end(), pick) == chosen.end())
                chosen.push_back(pick);
        }
        std::sort(chosen.begin(), chosen.end());
        for (std::size_t slot : chosen) {
            std::size_t t = start + slot / per_symbol;
            std::size_t c = slot % per_symbol;
            Elem delta = static_cast<Elem>(rng.below(static_cast<std::uint64_t>(f.p() - 1))) + 1;
            add_error(f, res, t, c, delta);
        }
    }
    return res;
}

ChannelResult apply_explicit(const Field& f, const SymbolSeq& sent,
                             const std::vector<ErrorEntry>& errors) {
    ChannelResult res;
    res.seq = sent;
    std::vector<ErrorEntry> sorted = errors;
    std::stable_sort(sorted.begin(), sorted.end(), [](const ErrorEntry& a, const ErrorEntry& b) {
        return a.t != b.t ? a.t < b.t : a.coord < b.coord;
    });
    for (const ErrorEntry& e : sorted) {
        if (e.t >= sent.length()) throw dimension_error("error time out of range");
        add_error(f, res, e.t, e.coord, f.norm(e.value));
    }
    return res;
}

} // namespace

ChannelResult apply_channel(const Field& f, const SymbolSeq& sent, const ChannelSpec& spec,
                            std::uint64_t seed) {
    switch (spec.kind) {
        case ChannelKind::none: {
            ChannelResult res;
            res.seq = sent;
            return res;
        }
        case ChannelKind::q_symmetric:
            return apply_q_symmetric(f, sent, spec.p_err, seed);
        case ChannelKind::per_window:
            return apply_per_window(f, sent, spec.weight, spec.stride, seed);
        case ChannelKind::explicit_errors:
            return apply_explicit(f, sent, spec.errors);
    }
    throw parse_error("unknown channel kind");
}

} // namespace rhcodec
