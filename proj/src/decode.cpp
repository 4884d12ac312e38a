#include "rhcodec/decode.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace rhcodec {

namespace {

const Vec& zero_or(const std::vector<Vec>& v, std::size_t t, const Vec& zero) {
    return t < v.size() ? v[t] : zero;
}

} // namespace

long cost(const SymbolSeq& a, const SymbolSeq& b, std::size_t horizon) {
    std::size_t nk = a.empty() ? (b.empty() ? 0 : b.y[0].size()) : a.y[0].size();
    std::size_t k = a.empty() ? (b.empty() ? 0 : b.u[0].size()) : a.u[0].size();
    Vec zy(nk, 0), zu(k, 0);
    long total = 0;
    for (std::size_t t = 0; t < horizon; ++t) {
        total += hamming(zero_or(a.y, t, zy), zero_or(b.y, t, zy));
        total += hamming(zero_or(a.u, t, zu), zero_or(b.u, t, zu));
    }
    return total;
}

long cost(const SymbolSeq& a, const SymbolSeq& b) {
    return cost(a, b, std::max(a.length(), b.length()));
}

long cost_bound(const WindowCode& wc, std::size_t T, std::size_t L) {
    if (L == 0) throw dimension_error("cost_bound: stride must be positive");
    return static_cast<long>((T + L - 1) / L) * wc.covering_radius();
}

DecodeResult receding_horizon_decode(const ConvCode& code, const SymbolSeq& received,
                                     const HorizonParams& params, const Budget& budget) {
    WindowCode wc(code, params.N, budget);
    return receding_horizon_decode(wc, received, params.L, budget);
}

DecodeResult receding_horizon_decode(const WindowCode& wc, const SymbolSeq& received,
                                     std::size_t L, const Budget& budget) {
    const ConvCode& code = wc.code();
    const Field& f = code.field();
    std::size_t N = wc.window(), k = code.k(), nk = code.nk();
    if (received.empty()) throw dimension_error("decode: empty received sequence");
    if (received.y.size() != received.u.size())
        throw dimension_error("decode: received y/u length mismatch");
    std::size_t T = received.length() - 1;
    if (L < 1 || L > N) throw dimension_error("decode: need 1 <= L <= N");
    if (N > T + 1) throw dimension_error("decode: window exceeds received length");

    // Observability stack rows: C A^{N-1}, ..., C A, C (newest time first).
    std::vector<Mat> obs;
    obs.reserve(N);
    {
        Mat cai = code.C();
        for (std::size_t i = 0; i < N; ++i) {
            obs.push_back(cai);
            if (i + 1 < N) cai = cai * code.A();
        }
        std::reverse(obs.begin(), obs.end());
    }

    const Vec zy(nk, 0), zu(k, 0);
    DecodeResult out;
    Vec x = code.zero_state();
    const std::size_t delta = x.size();
    const Mat& A = code.A();
    const Mat& B = code.B();

    // Window-local scratch, reused across iterations.
    Vec z(N * code.n());
    Vec xnext(delta);
    const std::size_t off = N * nk;  // start of the input half of the window
    std::size_t windows = (T + L) / L;
    out.u.reserve(windows * L + code.kappa_max());
    out.step_costs.reserve(windows);

    for (std::size_t t = 0;; t += L) {
        // z = (ytilde - free response; negated utilde), window times
        // t+N-1 down to t, received zero-padded past T.
        for (std::size_t j = 0; j < N; ++j) {
            std::size_t time = t + N - 1 - j;
            const Mat& ob = obs[j];
            const Vec& yt = zero_or(received.y, time, zy);
            for (std::size_t i = 0; i < nk; ++i)
                z[j * nk + i] = f.sub(yt[i], f.dot(ob.row_data(i), x.data(), delta));
            const Vec& ut = zero_or(received.u, time, zu);
            for (std::size_t i = 0; i < k; ++i) z[off + j * k + i] = f.neg(ut[i]);
        }

        long ml_weight = 0;
        std::uint64_t ties = 0;
        const Vec& leader = wc.coset_leader(z, ml_weight, ties);
        out.step_costs.push_back(ml_weight);
        if (ties > 1) out.tie_events.push_back({t, ties});

        // The nearest codeword is z - leader and the optimal window inputs
        // are its negated message part, so u = leader - z there. Commit the
        // oldest L inputs (the last L blocks) and advance the state.
        for (std::size_t i = 0; i < L; ++i) {
            std::size_t block = N - 1 - i;  // time t + i
            Vec ui(k);
            for (std::size_t c = 0; c < k; ++c) {
                std::size_t pos = off + block * k + c;
                ui[c] = f.sub(leader[pos], z[pos]);
            }
            for (std::size_t r = 0; r < delta; ++r)
                xnext[r] = f.add(f.dot(A.row_data(r), x.data(), delta),
                                 f.dot(B.row_data(r), ui.data(), k));
            x.swap(xnext);
            out.u.push_back(std::move(ui));
        }
        if (t + L > T) break;
    }

    std::vector<Vec> ext = code.zero_return_extension(x, budget);
    out.tau = ext.size();
    for (Vec& e : ext) out.u.push_back(std::move(e));

    ConvCode::Encoded enc = code.encode(out.u);
    if (weight(enc.final_state) != 0)
        throw invariant_violation("receding horizon decode: state failed to return to zero");
    out.codeword = std::move(enc.seq);
    out.cost = cost(received, out.codeword);
    out.horizon_cost = cost(received, out.codeword, T);
    return out;
}

DecodeResult exact_decode(const ConvCode& code, const SymbolSeq& received, const Budget& budget) {
    const Field& f = code.field();
    const std::uint32_t p = f.p();
    std::size_t k = code.k(), nk = code.nk(), delta = code.delta();
    if (received.empty()) throw dimension_error("decode: empty received sequence");
    if (received.y.size() != received.u.size())
        throw dimension_error("decode: received y/u length mismatch");
    std::size_t T = received.length() - 1;
    std::size_t stages = T + code.kappa_max() + 1;  // inputs at t = 0..T+kappa_max

    std::uint64_t nstates = checked_pow(p, delta);
    std::uint64_t ninputs = checked_pow(p, k);
    budget.check(nstates * ninputs, "exact decode state-input table");
    budget.check(nstates * stages, "exact decode value table");

    // Index <-> vector maps (big-endian digits, so index order = lex order).
    auto decode_digits = [&](std::uint64_t idx, std::size_t len) {
        Vec v(len, 0);
        for (std::size_t i = len; i-- > 0;) {
            v[i] = static_cast<Elem>(idx % p);
            idx /= p;
        }
        return v;
    };
    auto index_of = [&](const Vec& v) {
        std::uint64_t idx = 0;
        for (Elem e : v) idx = idx * p + static_cast<std::uint64_t>(e);
        return idx;
    };

    // Precomputed transition/output tables.
    std::vector<Vec> xs(nstates), us(ninputs), dus(ninputs), cxs(nstates);
    std::vector<std::uint64_t> next(nstates * ninputs);
    for (std::uint64_t s = 0; s < nstates; ++s) {
        xs[s] = decode_digits(s, delta);
        cxs[s] = code.C().apply(xs[s]);
    }
    std::vector<Vec> bus(ninputs);
    for (std::uint64_t ui = 0; ui < ninputs; ++ui) {
        us[ui] = decode_digits(ui, k);
        dus[ui] = code.D().apply(us[ui]);
        bus[ui] = code.B().apply(us[ui]);
    }
    for (std::uint64_t s = 0; s < nstates; ++s) {
        Vec ax = code.A().apply(xs[s]);
        for (std::uint64_t ui = 0; ui < ninputs; ++ui) {
            Vec nx(delta);
            for (std::size_t i = 0; i < delta; ++i) nx[i] = f.add(ax[i], bus[ui][i]);
            next[s * ninputs + ui] = index_of(nx);
        }
    }

    const long INF = std::numeric_limits<long>::max() / 4;
    const Vec zy(nk, 0), zu(k, 0);

    // Backward pass. value[s] holds V_{t+1} while filling stage t.
    std::vector<long> value(nstates, INF);
    value[0] = 0;  // terminal: only the zero state is admissible
    std::vector<std::uint32_t> argmin(stages * nstates, 0);
    std::vector<long> prev(nstates);

    for (std::size_t t = stages; t-- > 0;) {
        const Vec& yt = zero_or(received.y, t, zy);
        const Vec& ut = zero_or(received.u, t, zu);
        for (std::uint64_t s = 0; s < nstates; ++s) {
            long best = INF;
            std::uint32_t bestu = 0;
            for (std::uint64_t ui = 0; ui < ninputs; ++ui) {
                long tail = value[next[s * ninputs + ui]];
                if (tail >= INF) continue;
                long c = tail;
                for (std::size_t i = 0; i < k; ++i)
                    if (us[ui][i] != ut[i]) ++c;
                for (std::size_t i = 0; i < nk; ++i)
                    if (f.add(cxs[s][i], dus[ui][i]) != yt[i]) ++c;
                if (c < best) {  // strict: ties keep the lex-smallest input
                    best = c;
                    bestu = static_cast<std::uint32_t>(ui);
                }
            }
            prev[s] = best;
            argmin[t * nstates + s] = bestu;
        }
        value.swap(prev);
    }
    if (value[0] >= INF)
        throw invariant_violation("exact decode: no admissible trajectory");

    // Forward pass from the zero state.
    DecodeResult out;
    std::uint64_t s = 0;
    std::vector<std::uint64_t> visited(stages + 1);
    for (std::size_t t = 0; t < stages; ++t) {
        visited[t] = s;
        std::uint32_t ui = argmin[t * nstates + s];
        out.u.push_back(us[ui]);
        s = next[s * ninputs + ui];
    }
    visited[stages] = s;
    if (s != 0) throw invariant_violation("exact decode: forward pass missed the terminal state");

    ConvCode::Encoded enc = code.encode(out.u);
    out.codeword = std::move(enc.seq);
    // Trailing stages past T where nothing happens (zero state, zero input,
    // zero output) carry no information; drop them.
    std::size_t len = out.codeword.length();
    while (len > T + 1 && visited[len - 1] == 0 && weight(out.codeword.y[len - 1]) == 0 &&
           weight(out.codeword.u[len - 1]) == 0)
        --len;
    out.codeword.y.resize(len);
    out.codeword.u.resize(len);
    out.u.resize(len);
    out.tau = len > T + 1 ? len - 1 - T : 0;
    out.cost = cost(received, out.codeword);
    out.horizon_cost = cost(received, out.codeword, T);
    if (out.cost != value[0])
        throw invariant_violation("exact decode: DP value " + std::to_string(value[0]) +
                                  " != recomputed cost " + std::to_string(out.cost));
    return out;
}

} // namespace rhcodec
