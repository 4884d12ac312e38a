#pragma once

#include <cstdint>

namespace rhcodec {

// SplitMix64 (Steele, Lea, Flood; public domain reference constants).
// Chosen over <random> engines + distributions because its output stream is
// fully specified: identical bytes on every platform and compiler. Streams
// are split by seed mixing (mix_seed), so per-trial generators are
// independent of scheduling and worker count.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, m) by rejection.
    std::uint64_t below(std::uint64_t m) {
        if (m <= 1) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % m;
    }

    // Bernoulli(threshold / 2^32); threshold precomputed from a probability.
    bool flip(std::uint32_t threshold) { return (next() >> 32) < threshold; }
};

// Derive an independent stream seed from (master, index). Two finalizer
// rounds decorrelate even adjacent indices.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 g(master ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    g.next();
    return g.next();
}

// Probability -> 32-bit Bernoulli threshold, rounding to nearest. Exact and
// platform-independent for p in [0, 1].
inline std::uint32_t prob_to_threshold(double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return 0xffffffffu;
    double scaled = p * 4294967296.0 + 0.5;
    if (scaled >= 4294967295.0) return 0xffffffffu;
    return static_cast<std::uint32_t>(scaled);
}

} // namespace rhcodec
