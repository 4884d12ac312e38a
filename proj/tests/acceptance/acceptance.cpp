// Acceptance suite: one criterion per function, one PASS/FAIL line per
// criterion on stdout, nonzero exit if anything failed.  Each criterion is
// self-contained and uses fixed seeds, so a failure is reproducible by
// running the binary with the criterion number as its only argument.

#include <chrono>
#include <climits>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rhcodec/bench.hpp"
#include "rhcodec/channel.hpp"
#include "rhcodec/decode.hpp"
#include "rhcodec/density.hpp"
#include "rhcodec/experiment.hpp"
#include "rhcodec/io.hpp"
#include "rhcodec/rng.hpp"
#include "rhcodec/window_code.hpp"

#ifndef FIXTURE_DIR
#define FIXTURE_DIR "examples"
#endif

using namespace rhcodec;

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

ConvCode load_fixture(const char* name) {
    return load_code_spec(std::string(FIXTURE_DIR) + "/" + name).code;
}

ConvCode make_f5() {
    Field f(5);
    return ConvCode(f, Mat(f, {{0}}), Mat(f, {{1, 2}}), Mat(f, {{4}}), Mat(f, {{1, 3}}));
}

ConvCode make_e41() {
    Field f(2);
    Mat bd(f, {{0, 1}, {1, 1}});
    return ConvCode(f, Mat::identity(f, 2), bd, bd, bd);
}

ConvCode make_rep3() {
    Field f(2);
    return ConvCode(f, Mat(f, 0, 0), Mat(f, 0, 1), Mat(f, 2, 0), Mat(f, {{1}, {1}}));
}

// Lexicographic odometer over canonical vectors; false once v wraps to zero.
bool next_tuple(Vec& v, std::uint32_t p) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (static_cast<std::uint32_t>(++v[i]) < p) return true;
        v[i] = 0;
    }
    return false;
}

Vec random_vec(SplitMix64& rng, std::size_t len, std::uint32_t p) {
    Vec v(len);
    for (Elem& e : v) e = static_cast<Elem>(rng.below(p));
    return v;
}

SymbolSeq random_received(SplitMix64& rng, const ConvCode& code, std::size_t len) {
    SymbolSeq s;
    for (std::size_t t = 0; t < len; ++t) {
        s.y.push_back(random_vec(rng, code.nk(), code.field().p()));
        s.u.push_back(random_vec(rng, code.k(), code.field().p()));
    }
    return s;
}

// Closed codeword frame of exactly `len` symbols: random message, zero-return
// extension, zero padding.
SymbolSeq random_frame(const ConvCode& code, SplitMix64& rng, std::size_t len) {
    std::size_t mlen = len > code.kappa_max() ? len - code.kappa_max() : 0;
    std::vector<Vec> inputs;
    for (std::size_t t = 0; t < mlen; ++t)
        inputs.push_back(random_vec(rng, code.k(), code.field().p()));
    Vec state = code.encode(inputs).final_state;
    for (Vec& e : code.zero_return_extension(state)) inputs.push_back(std::move(e));
    ConvCode::Encoded full = code.encode(inputs);
    require(weight(full.final_state) == 0, "frame did not close");
    return pad_to(full.seq, len, code.nk(), code.k());
}

std::vector<Vec> all_codewords(const WindowCode& wc) {
    std::vector<Vec> cws;
    Vec m(wc.dim(), 0);
    do {
        cws.push_back(wc.encode_message(m));
    } while (next_tuple(m, wc.field().p()));
    return cws;
}

long naive_nearest_distance(const std::vector<Vec>& cws, const Vec& z) {
    long best = LONG_MAX;
    for (const Vec& c : cws) {
        long d = 0;
        for (std::size_t i = 0; i < z.size() && d < best; ++i) d += z[i] != c[i];
        if (d < best) best = d;
    }
    return best;
}

// q^e, saturating at `cap` to keep eligibility checks overflow-free.
std::uint64_t pow_capped(std::uint64_t q, std::size_t e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > cap / q) return cap + 1;
        r *= q;
    }
    return r;
}

std::string fmt_vec(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// --- criterion bodies ---------------------------------------------------

std::string criterion_window_goldens() {
    ConvCode code = load_fixture("f5_paper.code");
    WindowCode w2(code, 2);
    Mat h2(code.field(), {{1, 0, 1, 3, 4, 3}, {0, 1, 0, 0, 1, 3}});
    require(w2.check() == h2, "window check matrix mismatch");
    require(w2.min_distance() == 2, "window distance != 2");
    AdmissibleCapability cap = admissible_capability(w2, 1);
    require(cap.protected_indices == std::vector<std::size_t>{2, 5, 6},
            "protected coordinate set mismatch");
    require(cap.d_prime == 2, "restricted distance != 2");
    require(cap.meets_distance_condition, "distance condition not met");
    return "H_2, d_2=2, protected {2,5,6}, d'=2";
}

std::string criterion_ml_goldens() {
    ConvCode code = load_fixture("f2_appendix.code");
    const Field& f = code.field();

    WindowCode w1(code, 1);
    MLDecodeResult one = w1.ml_decode({0, 1, 0, 0});
    require(one.tie_count == 2, "expected a 2-way tie");
    std::vector<Vec> nearest = w1.nearest_codewords({0, 1, 0, 0});
    require(nearest == std::vector<Vec>{{0, 0, 0, 0}, {0, 1, 1, 0}}, "nearest set mismatch");

    WindowCode w2(code, 2);
    MLDecodeResult two = w2.ml_decode({1, 1, 0, 1, 0, 0, 0, 0});
    require(two.tie_count == 1, "expected a unique decode");
    require(two.codeword == Vec{1, 1, 0, 1, 0, 0, 1, 0}, "decoded codeword mismatch");
    Vec msg = w2.message_of(two.codeword);
    // Oldest input block is the last k entries of the (negated) message part.
    require(f.neg(msg[2]) == 1 && f.neg(msg[3]) == 0, "committed input != (1,0)");
    return "tie {0000,0110}; unique decode -> u_t=(1,0)";
}

std::string criterion_oracle_equivalence() {
    struct Entry {
        const char* name;
        ConvCode code;
    };
    std::vector<Entry> entries;
    entries.push_back({"gf5", load_fixture("f5_paper.code")});
    entries.push_back({"gf2", load_fixture("f2_appendix.code")});
    entries.push_back({"rep3", make_rep3()});

    SplitMix64 rng(0xacce9703u);
    std::uint64_t exhaustive = 0, sampled = 0;
    for (const Entry& e : entries) {
        std::uint32_t q = e.code.field().p();
        for (std::size_t N = 1; N <= 3; ++N) {
            WindowCode wc(e.code, N);
            std::vector<Vec> cws = all_codewords(wc);
            std::uint64_t space = pow_capped(q, wc.block_length(), 1u << 20);
            auto check_one = [&](const Vec& z) {
                MLDecodeResult ml = wc.ml_decode(z);
                require(weight(wc.syndrome(ml.codeword)) == 0, "decoded word not in code");
                require(hamming(z, ml.codeword) == ml.error_weight, "reported weight wrong");
                long ref = naive_nearest_distance(cws, z);
                if (ml.error_weight != ref)
                    throw std::runtime_error("distance mismatch (" + std::string(e.name) +
                                             " N=" + std::to_string(N) + " z=" + fmt_vec(z) +
                                             "): table " + std::to_string(ml.error_weight) +
                                             " vs naive " + std::to_string(ref));
            };
            if (space <= (1u << 20)) {
                Vec z(wc.block_length(), 0);
                do {
                    check_one(z);
                    ++exhaustive;
                } while (next_tuple(z, q));
            } else {
                for (int i = 0; i < 100000; ++i) {
                    check_one(random_vec(rng, wc.block_length(), q));
                    ++sampled;
                }
            }
        }
    }
    return std::to_string(exhaustive) + " exhaustive + " + std::to_string(sampled) +
           " sampled receiveds agree";
}

std::string criterion_cost_bound() {
    std::vector<ConvCode> codes{load_fixture("f5_paper.code"), load_fixture("f2_appendix.code")};
    std::vector<std::vector<WindowCode>> wcs(codes.size());
    for (std::size_t c = 0; c < codes.size(); ++c)
        for (std::size_t N = 1; N <= 4; ++N) wcs[c].emplace_back(codes[c], N);

    SplitMix64 rng(0xb0047e11u);
    const std::size_t trials = 12000;
    long max_cost = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        std::size_t c = i % codes.size();
        const ConvCode& code = codes[c];
        std::size_t N = 1 + rng.below(4);
        std::size_t L = 1 + rng.below(static_cast<std::uint32_t>(N));
        std::size_t T = (N - 1) + rng.below(static_cast<std::uint32_t>(32 - N));
        SymbolSeq received;
        if (i % 2 == 0) {
            received = random_received(rng, code, T + 1);
        } else {
            received = random_frame(code, rng, T + 1);
            ChannelSpec ch;
            ch.kind = ChannelKind::q_symmetric;
            ch.p_err = 0.30 * static_cast<double>(rng.below(1000)) / 1000.0;
            received = apply_channel(code.field(), received, ch, rng.next()).seq;
        }
        const WindowCode& wc = wcs[c][N - 1];
        DecodeResult dec = receding_horizon_decode(wc, received, L);
        require(code.is_codeword(dec.codeword), "decoder output not a codeword");
        long bound = cost_bound(wc, T, L);
        if (dec.horizon_cost > bound)
            throw std::runtime_error("cost " + std::to_string(dec.horizon_cost) + " > bound " +
                                     std::to_string(bound) + " at trial " + std::to_string(i));
        max_cost = std::max(max_cost, dec.horizon_cost);
    }
    return std::to_string(trials) + " decodes within bound (max horizon cost " +
           std::to_string(max_cost) + ")";
}

std::string criterion_window_recovery() {
    ConvCode code = load_fixture("f5_paper.code");
    const Field& f = code.field();
    WindowCode wc(code, 2);
    SplitMix64 rng(0x5eed0005u);

    std::uint64_t patterns = 0;
    auto decode_and_check = [&](const SymbolSeq& sent, const SymbolSeq& received) {
        DecodeResult dec = receding_horizon_decode(wc, received, 1);
        require(code.is_codeword(dec.codeword), "decoder output not a codeword");
        require(same_codeword(dec.codeword, sent), "frame not recovered");
        ++patterns;
    };

    // Every error pattern with at most one wrong field symbol in any length-2
    // window: corrupted times pairwise non-adjacent, one coordinate each.
    for (std::size_t T = 1; T <= 10; ++T) {
        SymbolSeq sent = random_frame(code, rng, T + 1);
        SymbolSeq work = sent;
        std::function<void(std::size_t, bool)> sweep = [&](std::size_t t, bool prev_hit) {
            if (t > T) {
                decode_and_check(sent, work);
                return;
            }
            sweep(t + 1, false);
            if (prev_hit) return;
            for (std::size_t coord = 0; coord < code.n(); ++coord) {
                Elem& slot = coord < code.nk() ? work.y[t][coord] : work.u[t][coord - code.nk()];
                Elem orig = slot;
                for (Elem d = 1; d < static_cast<Elem>(f.p()); ++d) {
                    slot = f.add(orig, d);
                    sweep(t + 1, true);
                }
                slot = orig;
            }
        };
        sweep(0, false);
    }
    return std::to_string(patterns) + " error patterns all recovered";
}

std::string criterion_exact_ordering() {
    std::vector<ConvCode> codes{load_fixture("f2_appendix.code"), load_fixture("f5_paper.code")};
    std::vector<std::vector<WindowCode>> wcs(codes.size());
    for (std::size_t c = 0; c < codes.size(); ++c)
        for (std::size_t N = 1; N <= 3; ++N) wcs[c].emplace_back(codes[c], N);

    SplitMix64 rng(0x6e6ac7u);
    const std::size_t trials = 1200;
    std::size_t brute_forced = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        std::size_t c = i % codes.size();
        const ConvCode& code = codes[c];
        std::uint32_t q = code.field().p();
        // Every third trial is small enough for full codeword enumeration.
        std::size_t T;
        if (i % 3 == 0) T = rng.below(code.field().p() == 2 ? 6 : 2);
        else T = rng.below(21);
        std::size_t N = 1 + rng.below(static_cast<std::uint32_t>(std::min<std::size_t>(3, T + 1)));
        std::size_t L = 1 + rng.below(static_cast<std::uint32_t>(N));
        SymbolSeq received;
        if (i % 2 == 0) {
            received = random_received(rng, code, T + 1);
        } else {
            received = random_frame(code, rng, T + 1);
            ChannelSpec ch;
            ch.kind = ChannelKind::q_symmetric;
            ch.p_err = 0.25;
            received = apply_channel(code.field(), received, ch, rng.next()).seq;
        }

        DecodeResult rh = receding_horizon_decode(wcs[c][N - 1], received, L);
        DecodeResult ex = exact_decode(code, received);
        require(code.is_codeword(rh.codeword) && code.is_codeword(ex.codeword),
                "decoder output not a codeword");
        if (ex.cost > rh.cost)
            throw std::runtime_error("exact cost " + std::to_string(ex.cost) + " > heuristic " +
                                     std::to_string(rh.cost) + " at trial " + std::to_string(i));

        std::size_t stages = T + 1 + code.kappa_max();
        if (pow_capped(q, code.k() * stages, 1u << 16) <= (1u << 16)) {
            SymbolSeq padded = pad_to(received, stages, code.nk(), code.k());
            long best = LONG_MAX;
            Vec stacked(stages * code.k(), 0);
            std::vector<Vec> u(stages, Vec(code.k(), 0));
            do {
                for (std::size_t t = 0; t < stages; ++t)
                    for (std::size_t j = 0; j < code.k(); ++j) u[t][j] = stacked[t * code.k() + j];
                ConvCode::Encoded enc = code.encode(u);
                if (weight(enc.final_state) != 0) continue;
                best = std::min(best, cost(padded, enc.seq));
            } while (next_tuple(stacked, q));
            if (ex.cost != best)
                throw std::runtime_error("exact cost " + std::to_string(ex.cost) +
                                         " != brute force " + std::to_string(best) + " at trial " +
                                         std::to_string(i));
            ++brute_forced;
        }
    }
    return std::to_string(trials) + " ordered trials, " + std::to_string(brute_forced) +
           " verified against brute force";
}

std::string criterion_multiplicity_bound() {
    ConvCode code = load_fixture("f2_appendix.code");
    WindowCode w1(code, 1);

    // Reference value rebuilt from scratch: enumerate the 1-window code,
    // its minimum distance, and the radius-t ball coverage directly.
    std::vector<Vec> cws = all_codewords(w1);
    require(cws.size() == 4, "expected 4 window codewords");
    long d1 = LONG_MAX;
    for (const Vec& a : cws)
        for (const Vec& b : cws)
            if (a != b) d1 = std::min(d1, hamming(a, b));
    long t = (d1 - 1) / 2;
    std::uint64_t covered = 0, total = 0;
    Vec z(w1.block_length(), 0);
    do {
        ++total;
        for (const Vec& c : cws)
            if (hamming(z, c) <= t) {
                ++covered;
                break;
            }
    } while (next_tuple(z, 2));
    // Input words of weight <= t (here: just the zero word).
    std::uint64_t e_kt = 0;
    Vec m(w1.dim(), 0);
    do {
        if (weight(m) <= t) ++e_kt;
    } while (next_tuple(m, 2));

    Rational density_ref(covered, total);
    Rational outside_ref(total - covered, total);
    Rational reference = density_ref * outside_ref / Rational(e_kt);  // M = 2
    require(reference == Rational(3) / 16, "independent enumeration != 3/16");
    Rational bound = multiplicity_bound(code, 1, 1, 2);
    require(bound == reference, "multiplicity_bound disagrees with enumeration");
    require(rational_str(bound) == "3/16", "unexpected rational form");

    // Monte Carlo: frequency of >= 2 nearest codewords in the first window.
    ExperimentConfig cfg;
    cfg.code_json = code_spec_json(CodeSpec{code, std::nullopt, "mc"});
    cfg.window = 1;
    cfg.stride = 1;
    cfg.message_len = 6;
    cfg.trials = 100000;
    cfg.seed = 0x7ab5u;
    cfg.workers = 4;
    cfg.channel.kind = ChannelKind::q_symmetric;
    cfg.channel.p_err = 0.05;
    ExperimentReport rep = run_experiment(code, cfg);
    require(rep.mult_bound && *rep.mult_bound == reference, "report bound mismatch");
    double freq = static_cast<double>(rep.mult_event_count) / static_cast<double>(cfg.trials);
    double b = rational_double(reference);
    double limit = b + 3.0 * std::sqrt(b * (1.0 - b) / static_cast<double>(cfg.trials));
    if (freq > limit)
        throw std::runtime_error("tie frequency " + num(freq) + " above " + num(limit));
    return "bound 3/16; tie frequency " + num(freq) + " <= " + num(limit);
}

std::string criterion_perfect_density() {
    DensityStats stats = density_stats(7, 4, 3, Field(2));
    require(stats.density == Rational(1), "density != 1");
    require(rational_str(stats.density) == "1", "unexpected rational form");

    // Brute-force cross-check on an explicit [7,4] generator.
    Field f(2);
    Mat g(f, {{1, 0, 0, 0, 1, 1, 0},
              {0, 1, 0, 0, 1, 0, 1},
              {0, 0, 1, 0, 0, 1, 1},
              {0, 0, 0, 1, 1, 1, 1}});
    std::vector<Vec> cws;
    Vec m(4, 0);
    do {
        cws.push_back(g.transpose().apply(m));
    } while (next_tuple(m, 2));
    long dmin = LONG_MAX;
    for (const Vec& c : cws)
        if (weight(c) != 0) dmin = std::min(dmin, weight(c));
    require(dmin == 3, "generator is not distance 3");
    std::size_t covered = 0;
    Vec z(7, 0);
    do {
        int hits = 0;
        for (const Vec& c : cws) hits += hamming(z, c) <= 1;
        require(hits == 1, "ball coverage not exactly 1");
        ++covered;
    } while (next_tuple(z, 2));
    require(covered == 128, "expected 128 vectors");
    return "density 1 == 128/128 covered, each exactly once";
}

std::string criterion_decode_speed() {
    ConvCode code = load_fixture("f2_appendix.code");
    BenchResult r = bench_decoders(code, 50, 2, 1, 201, 0.05, 0xbe7cu);
    require(r.exact_run, "exact decoder did not run");
    if (!(r.heuristic_median_us < r.exact_median_us))
        throw std::runtime_error("heuristic median " + num(r.heuristic_median_us) +
                                 "us not below exact median " + num(r.exact_median_us) + "us");
    return "medians " + num(r.heuristic_median_us) + "us < " + num(r.exact_median_us) + "us";
}

std::string criterion_determinism() {
    ConvCode code = load_fixture("f2_appendix.code");
    ExperimentConfig cfg;
    cfg.code_json = code_spec_json(CodeSpec{code, std::nullopt, "determinism"});
    cfg.window = 2;
    cfg.stride = 1;
    cfg.message_len = 12;
    cfg.trials = 400;
    cfg.seed = 20260815;
    cfg.run_exact = true;
    cfg.channel.kind = ChannelKind::q_symmetric;
    cfg.channel.p_err = 0.08;

    cfg.workers = 1;
    ExperimentReport a = run_experiment(code, cfg);
    std::string csv_a = report_csv(a);
    require(report_csv(run_experiment(code, cfg)) == csv_a, "rerun differs");
    cfg.workers = 4;
    ExperimentReport c = run_experiment(code, cfg);
    require(report_csv(c) == csv_a, "multi-worker run differs");
    require(report_json(c) == report_json(a), "JSON report differs");

    // Re-run from the embedded manifest alone.
    std::string first_line = csv_a.substr(0, csv_a.find('\n'));
    const std::string tag = "# manifest: ";
    require(first_line.rfind(tag, 0) == 0, "manifest line missing");
    nlohmann::json manifest = nlohmann::json::parse(first_line.substr(tag.size()));
    ExperimentConfig replay = parse_config_json(manifest.at("config").dump());
    ConvCode replay_code = parse_code_spec(replay.code_json).code;
    replay.workers = 3;
    require(report_csv(run_experiment(replay_code, replay)) == csv_a,
            "manifest replay differs");
    return "CSV byte-identical across reruns, worker counts, manifest replay";
}

struct Criterion {
    int id;
    const char* label;
    std::function<std::string()> body;
};

} // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria{
        {1, "window check matrix, distance and protected-set goldens", criterion_window_goldens},
        {2, "tie reporting and unique-decode goldens", criterion_ml_goldens},
        {3, "table decoder agrees with exhaustive nearest-codeword search",
         criterion_oracle_equivalence},
        {4, "horizon cost within per-step covering-radius bound", criterion_cost_bound},
        {5, "single-error-per-window frames decode to the transmitted codeword",
         criterion_window_recovery},
        {6, "exact decoder never beaten and matches brute force", criterion_exact_ordering},
        {7, "first-window tie probability: exact rational and Monte Carlo",
         criterion_multiplicity_bound},
        {8, "[7,4,3] density exactly 1, confirmed by ball counting", criterion_perfect_density},
        {9, "receding-horizon decode faster than exact DP", criterion_decode_speed},
        {10, "reports byte-identical across runs and worker counts", criterion_determinism},
    };

    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failures = 0;
    for (const Criterion& c : criteria) {
        if (only && c.id != only) continue;
        auto start = std::chrono::steady_clock::now();
        try {
            std::string detail = c.body();
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                              .count();
            std::printf("PASS criterion %d: %s — %s (%.2fs)\n", c.id, c.label, detail.c_str(),
                        secs);
        } catch (const std::exception& e) {
            ++failures;
            std::printf("FAIL criterion %d: %s — %s\n", c.id, c.label, e.what());
        }
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criteria failed\n", failures);
    return failures ? 1 : 0;
}
