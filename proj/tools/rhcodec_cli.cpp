// rhcodec: command-line front end for the convolutional coding library.
//
// Subcommands: analyze, encode, decode, simulate, bench.  Global flags
// --seed/--budget/--format apply to every subcommand; --budget also reads the
// RHCODEC_BUDGET environment variable.  Exit codes: 0 success (decode ties are
// not errors), 1 usage/parse/budget errors, 2 violated mathematical
// invariants.
//
// Every output embeds a run manifest (tool version, command, parameters) so
// machine-readable outputs are reproducible from the manifest alone.

#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rhcodec/bench.hpp"
#include "rhcodec/decode.hpp"
#include "rhcodec/density.hpp"
#include "rhcodec/errors.hpp"
#include "rhcodec/experiment.hpp"
#include "rhcodec/io.hpp"
#include "rhcodec/rng.hpp"
#include "rhcodec/version.hpp"
#include "rhcodec/window_code.hpp"

namespace {

using nlohmann::json;
using namespace rhcodec;

struct GlobalOpts {
    std::uint64_t seed = 1;
    std::uint64_t budget = Budget{}.max_enumeration;
    std::string format = "text";

    Budget make_budget() const { return Budget{budget}; }
};

json base_manifest(const GlobalOpts& g, const std::string& command) {
    json m;
    m["tool"] = "rhcodec";
    m["version"] = RHCODEC_VERSION;
    m["command"] = command;
    m["seed"] = g.seed;
    m["budget"] = g.budget;
    m["format"] = g.format;
    return m;
}

std::string manifest_line(const json& manifest) { return "# manifest: " + manifest.dump() + "\n"; }

json mat_rows(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j));
        rows.push_back(std::move(r));
    }
    return rows;
}

void print_mat(std::ostream& os, const Mat& m, const std::string& indent) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << indent;
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j);
        os << "\n";
    }
}

std::string seq_line(const Vec& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

void write_or_print(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

// ---------------------------------------------------------------- analyze --

int run_analyze(const GlobalOpts& g, const std::string& spec_path, std::size_t N, std::size_t L,
                std::size_t T, std::size_t mult_m, std::size_t mult_delta) {
    if (N == 0) throw dimension_error("analyze: window must be >= 1");
    if (L < 1 || L > N) throw dimension_error("analyze: need 1 <= stride <= window");
    Budget budget = g.make_budget();
    CodeSpec cs = load_code_spec(spec_path);
    const ConvCode& code = cs.code;
    if (mult_delta == 0) mult_delta = N;
    if (mult_delta < N) throw dimension_error("analyze: mult-delta must be >= window");

    std::vector<WindowCode> wcs;
    wcs.reserve(N);
    for (std::size_t i = 1; i <= N; ++i) wcs.emplace_back(code, i, budget);
    const WindowCode& wn = wcs.back();
    AdmissibleCapability cap = admissible_capability(wn, L, budget);
    Rational mult = multiplicity_bound(code, N, mult_delta, mult_m, budget);
    long bound = cost_bound(wn, T, L);

    json manifest = base_manifest(g, "analyze");
    manifest["spec"] = spec_path;
    manifest["window"] = N;
    manifest["stride"] = L;
    manifest["horizon_T"] = T;
    manifest["mult_m"] = mult_m;
    manifest["mult_delta"] = mult_delta;

    if (g.format == "structured") {
        json j;
        j["manifest"] = manifest;
        if (!cs.label.empty()) j["label"] = cs.label;
        j["field_p"] = code.field().p();
        j["n"] = code.n();
        j["k"] = code.k();
        j["delta"] = code.delta();
        j["kappa"] = code.kappa();
        j["generator_verified"] = cs.generator.has_value();
        j["window"] = N;
        j["B_N"] = mat_rows(wn.generator());
        j["H_N"] = mat_rows(wn.check());
        j["d_N"] = wn.min_distance();
        j["rho_N"] = wn.covering_radius();
        j["protected_indices"] = cap.protected_indices;
        j["d_prime"] = cap.d_prime;
        j["meets_distance_condition"] = cap.meets_distance_condition;
        j["cost_bound"] = bound;
        json dens = json::array();
        for (std::size_t i = 1; i <= N; ++i) {
            const WindowCode& w = wcs[i - 1];
            DensityStats ds =
                density_stats(w.block_length(), w.dim(), w.min_distance(), code.field());
            dens.push_back({{"window", i},
                            {"d", w.min_distance()},
                            {"rho", w.covering_radius()},
                            {"t", ds.t},
                            {"E_kt", ds.e_kt.str()},
                            {"density", rational_str(ds.density)},
                            {"density_approx", rational_double(ds.density)},
                            {"p_outside", rational_str(ds.p_outside)}});
        }
        j["density"] = std::move(dens);
        j["multiplicity_bound"] = rational_str(mult);
        j["multiplicity_bound_approx"] = rational_double(mult);
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (g.format == "csv") {
        std::ostringstream os;
        os << manifest_line(manifest);
        os << "key,value\n";
        os << "field_p," << code.field().p() << "\n";
        os << "n," << code.n() << "\nk," << code.k() << "\ndelta," << code.delta() << "\n";
        os << "kappa,\"" << seq_line(Vec(code.kappa().begin(), code.kappa().end())) << "\"\n";
        os << "window," << N << "\n";
        os << "d_N," << wn.min_distance() << "\nrho_N," << wn.covering_radius() << "\n";
        os << "d_prime," << cap.d_prime << "\n";
        os << "protected,\""
           << seq_line(Vec(cap.protected_indices.begin(), cap.protected_indices.end())) << "\"\n";
        os << "meets_distance_condition," << cap.meets_distance_condition << "\n";
        os << "cost_bound_T" << T << "_L" << L << "," << bound << "\n";
        for (std::size_t i = 1; i <= N; ++i) {
            const WindowCode& w = wcs[i - 1];
            DensityStats ds =
                density_stats(w.block_length(), w.dim(), w.min_distance(), code.field());
            os << "density_C" << i << "," << rational_str(ds.density) << "\n";
        }
        os << "multiplicity_bound_M" << mult_m << "_D" << mult_delta << "," << rational_str(mult)
           << "\n";
        std::cout << os.str();
        return 0;
    }

    std::ostringstream os;
    os << manifest_line(manifest);
    if (!cs.label.empty()) os << "code: " << cs.label << "\n";
    os << "field: GF(" << code.field().p() << ")  n=" << code.n() << " k=" << code.k()
       << " delta=" << code.delta() << "\n";
    os << "controllability indices:";
    for (std::size_t ki : code.kappa()) os << " " << ki;
    os << "\n";
    if (cs.generator) os << "generator: verified against the realization\n";
    os << "window code C_" << N << " [" << wn.block_length() << "," << wn.dim() << "]\n";
    os << "  B_" << N << " (generator, columns = messages):\n";
    print_mat(os, wn.generator(), "    ");
    os << "  H_" << N << " (check):\n";
    print_mat(os, wn.check(), "    ");
    os << "  d_" << N << " = " << wn.min_distance() << "   rho_" << N << " = "
       << wn.covering_radius() << "\n";
    os << "stride L=" << L << "\n";
    os << "  protected coordinates:";
    for (std::size_t idx : cap.protected_indices) os << " " << idx;
    os << "\n  d' = " << cap.d_prime << "  (distance condition d' >= d_N - 1: "
       << (cap.meets_distance_condition ? "met" : "not met") << ")\n";
    os << "  per-window correctable weight: " << cap.d_prime / 2 << "\n";
    os << "cost bound, T=" << T << ": ceil(T/L)*rho = " << bound << "\n";
    os << "densities:\n";
    for (std::size_t i = 1; i <= N; ++i) {
        const WindowCode& w = wcs[i - 1];
        DensityStats ds = density_stats(w.block_length(), w.dim(), w.min_distance(), code.field());
        os << "  C_" << i << ": d=" << w.min_distance() << " t=" << ds.t << " density="
           << rational_str(ds.density) << " (" << rational_double(ds.density) << ")\n";
    }
    os << "multiplicity bound (M=" << mult_m << ", through window " << mult_delta
       << "): " << rational_str(mult) << " (" << rational_double(mult) << ")\n";
    std::cout << os.str();
    return 0;
}

// ----------------------------------------------------------------- encode --

int run_encode(const GlobalOpts& g, const std::string& spec_path, const std::string& message,
               std::size_t random_len, std::size_t pad, const std::string& out_path) {
    Budget budget = g.make_budget();
    CodeSpec cs = load_code_spec(spec_path);
    const ConvCode& code = cs.code;
    const Field& f = code.field();

    std::vector<Vec> msg;
    if (random_len > 0 && !message.empty())
        throw parse_error("encode: give either --message or --random, not both");
    if (random_len > 0) {
        SplitMix64 rng(mix_seed(g.seed, 1));
        msg.resize(random_len);
        for (Vec& u : msg) {
            u.resize(code.k());
            for (Elem& e : u) e = static_cast<Elem>(rng.below(f.p()));
        }
    } else {
        std::istringstream is(message);
        Vec flat;
        long v;
        while (is >> v) flat.push_back(f.norm(static_cast<Elem>(v)));
        if (!is.eof()) throw parse_error("encode: --message must be whitespace-separated integers");
        if (flat.empty() || flat.size() % code.k() != 0)
            throw parse_error("encode: message length must be a nonzero multiple of k=" +
                              std::to_string(code.k()));
        for (std::size_t i = 0; i < flat.size(); i += code.k())
            msg.emplace_back(flat.begin() + i, flat.begin() + i + code.k());
    }

    ConvCode::Encoded enc = code.encode(msg);
    std::vector<Vec> inputs = msg;
    std::size_t tau = 0;
    for (Vec& e : code.zero_return_extension(enc.final_state, budget)) {
        inputs.push_back(std::move(e));
        ++tau;
    }
    ConvCode::Encoded full = code.encode(inputs);
    SymbolSeq seq = full.seq;
    if (pad > seq.length()) seq = pad_to(seq, pad, code.nk(), code.k());

    json manifest = base_manifest(g, "encode");
    manifest["spec"] = spec_path;
    manifest["message_len"] = msg.size();
    manifest["tau"] = tau;
    if (pad) manifest["pad"] = pad;

    std::string body = format_seq(f, seq, code.k());
    write_or_print(out_path, manifest_line(manifest) + body);
    return 0;
}

// ----------------------------------------------------------------- decode --

int run_decode(const GlobalOpts& g, const std::string& spec_path, const std::string& recv_path,
               std::size_t N, std::size_t L, bool exact, const std::string& out_path) {
    if (N == 0) throw dimension_error("decode: window must be >= 1");
    Budget budget = g.make_budget();
    CodeSpec cs = load_code_spec(spec_path);
    const ConvCode& code = cs.code;
    SymbolSeq received = load_seq(code, recv_path);

    DecodeResult dec = receding_horizon_decode(code, received, HorizonParams{N, L}, budget);
    if (!code.is_codeword(dec.codeword))
        throw invariant_violation("decode: output failed codeword membership");

    std::optional<DecodeResult> ex;
    if (exact) {
        ex = exact_decode(code, received, budget);
        if (ex->cost > dec.cost)
            throw invariant_violation("decode: exact cost exceeds heuristic cost");
    }

    json manifest = base_manifest(g, "decode");
    manifest["spec"] = spec_path;
    manifest["received"] = recv_path;
    manifest["window"] = N;
    manifest["stride"] = L;
    manifest["exact"] = exact;

    if (g.format == "structured") {
        json j;
        j["manifest"] = manifest;
        json uu = json::array();
        for (const Vec& u : dec.u) uu.push_back(u);
        j["inputs"] = std::move(uu);
        json cw = json::array();
        for (std::size_t t = 0; t < dec.codeword.length(); ++t) {
            Vec sym = dec.codeword.y[t];
            sym.insert(sym.end(), dec.codeword.u[t].begin(), dec.codeword.u[t].end());
            cw.push_back(sym);
        }
        j["codeword"] = std::move(cw);
        j["cost"] = dec.cost;
        j["horizon_cost"] = dec.horizon_cost;
        j["tau"] = dec.tau;
        j["step_costs"] = dec.step_costs;
        json ties = json::array();
        for (const TieEvent& e : dec.tie_events)
            ties.push_back({{"t", e.t}, {"tie_count", e.tie_count}});
        j["tie_events"] = std::move(ties);
        if (ex) {
            j["exact_cost"] = ex->cost;
            j["exact_matches"] = same_codeword(ex->codeword, dec.codeword);
        }
        std::string out = j.dump(2) + "\n";
        write_or_print(out_path, out);
        return 0;
    }

    if (g.format == "csv") {
        std::ostringstream os;
        os << manifest_line(manifest);
        os << "# cost=" << dec.cost << " horizon_cost=" << dec.horizon_cost << " tau=" << dec.tau;
        if (ex) os << " exact_cost=" << ex->cost;
        os << "\n";
        os << "step,t,window_error_weight,tie_count\n";
        for (std::size_t s = 0; s < dec.step_costs.size(); ++s) {
            std::size_t t = s * L;
            std::uint64_t tc = 1;
            for (const TieEvent& e : dec.tie_events)
                if (e.t == t) tc = e.tie_count;
            os << s << ',' << t << ',' << dec.step_costs[s] << ',' << tc << "\n";
        }
        write_or_print(out_path, os.str());
        return 0;
    }

    std::ostringstream os;
    os << manifest_line(manifest);
    os << "decoded " << received.length() << " symbols with window N=" << N << ", stride L=" << L
       << "\n";
    os << "cost: " << dec.cost << " (over times 0..T-1: " << dec.horizon_cost
       << "), zero-return tail tau=" << dec.tau << "\n";
    os << "window error weights:";
    for (long c : dec.step_costs) os << " " << c;
    os << "\n";
    if (dec.tie_events.empty()) {
        os << "ties: none\n";
    } else {
        os << "ties:";
        for (const TieEvent& e : dec.tie_events)
            os << " (t=" << e.t << ", count=" << e.tie_count << ")";
        os << "\n";
    }
    os << "recovered inputs:\n";
    for (std::size_t t = 0; t < dec.u.size(); ++t)
        os << "  t=" << t << ": " << seq_line(dec.u[t]) << "\n";
    os << "codeword (y | u per line):\n";
    for (std::size_t t = 0; t < dec.codeword.length(); ++t)
        os << "  " << seq_line(dec.codeword.y[t]) << " | " << seq_line(dec.codeword.u[t]) << "\n";
    if (ex) {
        os << "exact decoder: cost " << ex->cost
           << (same_codeword(ex->codeword, dec.codeword) ? " (same codeword)\n"
                                                         : " (different codeword)\n");
        if (!same_codeword(ex->codeword, dec.codeword)) {
            os << "exact codeword:\n";
            for (std::size_t t = 0; t < ex->codeword.length(); ++t)
                os << "  " << seq_line(ex->codeword.y[t]) << " | " << seq_line(ex->codeword.u[t])
                   << "\n";
        }
    }
    write_or_print(out_path, os.str());
    return 0;
}

// --------------------------------------------------------------- simulate --

int run_simulate(const GlobalOpts& g, const std::string& config_path, const std::string& out_dir,
                 std::size_t workers_override, bool have_workers) {
    ExperimentConfig cfg = parse_config_json(read_file(config_path));
    if (cfg.code_json.empty()) {
        if (cfg.code_file.empty())
            throw parse_error("simulate: config needs a `code` object or `code_file` path");
        std::filesystem::path base = std::filesystem::path(config_path).parent_path();
        std::string resolved = (base / cfg.code_file).string();
        std::string text =
            std::filesystem::exists(resolved) ? read_file(resolved) : read_file(cfg.code_file);
        cfg.code_json = nlohmann::json::parse(text).dump();
    }
    if (have_workers) cfg.workers = workers_override;
    CodeSpec cs = parse_code_spec(cfg.code_json);

    ExperimentReport report = run_experiment(cs.code, cfg);

    std::filesystem::create_directories(out_dir);
    std::filesystem::path dir(out_dir);
    write_file((dir / "trials.csv").string(), report_csv(report));
    write_file((dir / "report.json").string(), report_json(report) + "\n");

    if (g.format == "structured") {
        std::cout << report_json(report) << "\n";
    } else if (g.format == "csv") {
        std::cout << report_csv(report);
    } else {
        std::cout << manifest_line(json::parse(manifest_json(report.config)));
        std::cout << "trials: " << report.records.size() << "\n";
        std::cout << "frame errors: " << (report.records.size() - report.recovered_count) << "\n";
        std::cout << "max horizon cost: " << report.max_horizon_cost
                  << " (bound " << report.bound << ")\n";
        std::cout << "mean horizon cost: "
                  << static_cast<double>(report.total_horizon_cost) /
                         static_cast<double>(report.records.size())
                  << "\n";
        std::cout << "trials with ties: " << report.tie_trial_count << "\n";
        if (report.mult_bound)
            std::cout << "multiplicity events: " << report.mult_event_count << " (bound "
                      << rational_str(*report.mult_bound) << " = "
                      << rational_double(*report.mult_bound) << " per trial)\n";
        if (cfg.run_exact) std::cout << "exact-agree trials: " << report.exact_agree_count << "\n";
        std::cout << "wrote " << (dir / "trials.csv").string() << " and "
                  << (dir / "report.json").string() << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ bench --

int run_bench(const GlobalOpts& g, const std::string& spec_path, std::size_t N, std::size_t L,
              std::size_t T, std::size_t reps, double p_err, bool skip_exact) {
    if (N == 0) throw dimension_error("bench: window must be >= 1");
    Budget budget = g.make_budget();
    CodeSpec cs = load_code_spec(spec_path);
    BenchResult res = bench_decoders(cs.code, T, N, L, reps, p_err, g.seed, budget, !skip_exact);

    json manifest = base_manifest(g, "bench");
    manifest["spec"] = spec_path;
    manifest["window"] = N;
    manifest["stride"] = L;
    manifest["horizon_T"] = T;
    manifest["reps"] = reps;
    manifest["p_err"] = p_err;

    if (g.format == "structured") {
        json j;
        j["manifest"] = manifest;
        j["reps"] = res.reps;
        j["heuristic_median_us"] = res.heuristic_median_us;
        j["heuristic_total_cost"] = res.heuristic_total_cost;
        if (res.exact_run) {
            j["exact_median_us"] = res.exact_median_us;
            j["exact_total_cost"] = res.exact_total_cost;
        } else {
            j["exact"] = "skipped";
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::ostringstream os;
    os << manifest_line(manifest);
    os << "decoder,reps,T,median_us,total_cost\n";
    os << "receding_horizon," << res.reps << ',' << T << ',' << res.heuristic_median_us << ','
       << res.heuristic_total_cost << "\n";
    if (res.exact_run)
        os << "exact_dp," << res.reps << ',' << T << ',' << res.exact_median_us << ','
           << res.exact_total_cost << "\n";
    else
        os << "exact_dp," << res.reps << ',' << T << ",skipped,skipped\n";
    std::cout << os.str();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-field convolutional coding toolkit: sliding-window block codes, "
                 "receding-horizon decoding, channel simulation"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--seed", g.seed, "Master RNG seed")->capture_default_str();
    app.add_option("--budget", g.budget, "Enumeration budget (max table/sweep size)")
        ->envname("RHCODEC_BUDGET")
        ->capture_default_str();
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "structured"}))
        ->capture_default_str();

    int rc = 0;

    // analyze
    std::string an_spec;
    std::size_t an_N = 1, an_L = 1, an_T = 20, an_m = 2, an_delta = 0;
    CLI::App* an = app.add_subcommand("analyze", "Report window code parameters and bounds");
    an->add_option("spec", an_spec, "Code spec file")->required();
    an->add_option("-N,--window", an_N, "Window length N")->capture_default_str();
    an->add_option("-L,--stride", an_L, "Commit stride L")->capture_default_str();
    an->add_option("-T,--horizon", an_T, "Frame horizon for the cost bound")->capture_default_str();
    an->add_option("--mult-m", an_m, "Multiplicity M for the tie probability bound")
        ->capture_default_str();
    an->add_option("--mult-delta", an_delta, "Largest window for the tie bound (default N)");
    an->callback([&] { rc = run_analyze(g, an_spec, an_N, an_L, an_T, an_m, an_delta); });

    // encode
    std::string en_spec, en_msg, en_out;
    std::size_t en_rand = 0, en_pad = 0;
    CLI::App* en = app.add_subcommand("encode", "Encode a message into a codeword file");
    en->add_option("spec", en_spec, "Code spec file")->required();
    en->add_option("-m,--message", en_msg, "Whitespace-separated input symbols (k per time step)");
    en->add_option("--random", en_rand, "Encode this many random input symbols instead");
    en->add_option("--pad", en_pad, "Zero-pad the codeword to this many symbols");
    en->add_option("-o,--out", en_out, "Output file (default stdout)");
    en->callback([&] { rc = run_encode(g, en_spec, en_msg, en_rand, en_pad, en_out); });

    // decode
    std::string de_spec, de_recv, de_out;
    std::size_t de_N = 2, de_L = 1;
    bool de_exact = false;
    CLI::App* de = app.add_subcommand("decode", "Receding-horizon decode a received file");
    de->add_option("spec", de_spec, "Code spec file")->required();
    de->add_option("received", de_recv, "Received sequence file")->required();
    de->add_option("-N,--window", de_N, "Window length N")->capture_default_str();
    de->add_option("-L,--stride", de_L, "Commit stride L")->capture_default_str();
    de->add_flag("--exact", de_exact, "Also run the exact DP decoder and compare");
    de->add_option("-o,--out", de_out, "Output file (default stdout)");
    de->callback([&] { rc = run_decode(g, de_spec, de_recv, de_N, de_L, de_exact, de_out); });

    // simulate
    std::string si_config, si_out = ".";
    std::size_t si_workers = 0;
    CLI::App* si = app.add_subcommand("simulate", "Run a seeded decoding experiment from a config");
    si->add_option("config", si_config, "Experiment config file")->required();
    si->add_option("-o,--out-dir", si_out, "Directory for trials.csv and report.json")
        ->capture_default_str();
    CLI::Option* si_w = si->add_option("--workers", si_workers, "Override worker count");
    si->callback([&] { rc = run_simulate(g, si_config, si_out, si_workers, si_w->count() > 0); });

    // bench
    std::string be_spec;
    std::size_t be_N = 2, be_L = 1, be_T = 50, be_reps = 51;
    double be_perr = 0.05;
    bool be_skip = false;
    CLI::App* be = app.add_subcommand("bench", "Time the heuristic decoder against the exact DP");
    be->add_option("spec", be_spec, "Code spec file")->required();
    be->add_option("-N,--window", be_N, "Window length N")->capture_default_str();
    be->add_option("-L,--stride", be_L, "Commit stride L")->capture_default_str();
    be->add_option("-T,--horizon", be_T, "Frame horizon T")->capture_default_str();
    be->add_option("--reps", be_reps, "Decode repetitions")->capture_default_str();
    be->add_option("--p-err", be_perr, "Symbol error probability of the test channel")
        ->capture_default_str();
    be->add_flag("--skip-exact", be_skip, "Skip the exact decoder rows (budget escape hatch)");
    be->callback([&] { rc = run_bench(g, be_spec, be_N, be_L, be_T, be_reps, be_perr, be_skip); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const invariant_violation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const rhcodec::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
