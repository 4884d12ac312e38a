#include "rhcodec/bench.hpp"

#include <algorithm>
#include <chrono>

#include "rhcodec/channel.hpp"
#include "rhcodec/decode.hpp"
#include "rhcodec/errors.hpp"
#include "rhcodec/rng.hpp"
#include "rhcodec/window_code.hpp"

namespace rhcodec {

namespace {

double median_us(std::vector<double>& v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

} // namespace

BenchResult bench_decoders(const ConvCode& code, std::size_t T, std::size_t N, std::size_t L,
                           std::size_t reps, double p_err, std::uint64_t seed,
                           const Budget& budget, bool run_exact) {
    if (reps == 0) throw dimension_error("bench: need at least one repetition");
    if (T + 1 < code.kappa_max() + 1) throw dimension_error("bench: frame too short");
    const Field& f = code.field();
    WindowCode wc(code, N, budget);

    ChannelSpec chan;
    chan.kind = ChannelKind::q_symmetric;
    chan.p_err = p_err;

    std::size_t msg_len = T + 1 - code.kappa_max();
    std::vector<SymbolSeq> frames;
    frames.reserve(reps);
    for (std::size_t r = 0; r < reps; ++r) {
        std::uint64_t ts = mix_seed(seed, r);
        SplitMix64 rng(mix_seed(ts, 1));
        std::vector<Vec> msg(msg_len);
        for (Vec& u : msg) {
            u.resize(code.k());
            for (Elem& e : u) e = static_cast<Elem>(rng.below(f.p()));
        }
        ConvCode::Encoded enc = code.encode(msg);
        std::vector<Vec> inputs = msg;
        for (Vec& e : code.zero_return_extension(enc.final_state, budget))
            inputs.push_back(std::move(e));
        SymbolSeq sent = pad_to(code.encode(inputs).seq, T + 1, code.nk(), code.k());
        frames.push_back(apply_channel(f, sent, chan, mix_seed(ts, 2)).seq);
    }

    using clock = std::chrono::steady_clock;
    BenchResult res;
    res.reps = reps;
    res.horizon_T = T;
    res.exact_run = run_exact;
    std::vector<double> th, tx;
    th.reserve(reps);
    tx.reserve(reps);
    for (const SymbolSeq& frame : frames) {
        // One untimed pass per decoder warms caches and allocator state, so
        // the timed pass measures steady-state latency instead of whichever
        // decoder happens to run first on cold lines.
        { DecodeResult warm = receding_horizon_decode(wc, frame, L, budget); (void)warm; }
        auto t0 = clock::now();
        DecodeResult h = receding_horizon_decode(wc, frame, L, budget);
        auto t1 = clock::now();
        th.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
        res.heuristic_total_cost += h.cost;
        if (!run_exact) continue;
        { DecodeResult warm = exact_decode(code, frame, budget); (void)warm; }
        auto t2 = clock::now();
        DecodeResult x = exact_decode(code, frame, budget);
        auto t3 = clock::now();
        tx.push_back(std::chrono::duration<double, std::micro>(t3 - t2).count());
        res.exact_total_cost += x.cost;
        if (x.cost > h.cost)
            throw invariant_violation("bench: exact decoder cost exceeds heuristic cost");
    }
    res.heuristic_median_us = median_us(th);
    res.exact_median_us = median_us(tx);
    return res;
}

} // namespace rhcodec
