#include "rhcodec/experiment.hpp"

#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "rhcodec/errors.hpp"
#include "rhcodec/rng.hpp"
#include "rhcodec/version.hpp"
#include "rhcodec/window_code.hpp"

namespace rhcodec {

namespace {

SymbolSeq padded_transmit(const ConvCode& code, const std::vector<Vec>& msg_inputs,
                          const Budget& budget) {
    ConvCode::Encoded enc = code.encode(msg_inputs);
    std::vector<Vec> inputs = msg_inputs;
    for (Vec& e : code.zero_return_extension(enc.final_state, budget))
        inputs.push_back(std::move(e));
    ConvCode::Encoded full = code.encode(inputs);
    if (weight(full.final_state) != 0)
        throw invariant_violation("experiment: transmit state failed to return to zero");
    return pad_to(full.seq, msg_inputs.size() + code.kappa_max(), code.nk(), code.k());
}

TrialRecord run_trial(const ConvCode& code, const WindowCode& wc, const ExperimentConfig& cfg,
                      std::size_t trial) {
    const Field& f = code.field();
    std::uint64_t trial_seed = mix_seed(cfg.seed, trial);
    SplitMix64 msg_rng(mix_seed(trial_seed, 1));

    std::vector<Vec> msg(cfg.message_len);
    for (Vec& u : msg) {
        u.resize(code.k());
        for (Elem& e : u) e = static_cast<Elem>(msg_rng.below(f.p()));
    }
    SymbolSeq sent = padded_transmit(code, msg, cfg.budget);

    ChannelResult chan = apply_channel(f, sent, cfg.channel, mix_seed(trial_seed, 2));

    TrialRecord rec;
    rec.trial = trial;
    rec.channel_weight = static_cast<long>(chan.errors.size());

    DecodeResult dec = receding_horizon_decode(wc, chan.seq, cfg.stride, cfg.budget);
    if (!code.is_codeword(dec.codeword))
        throw invariant_violation("experiment: decoder output is not a codeword");
    rec.horizon_cost = dec.horizon_cost;
    rec.full_cost = dec.cost;
    rec.tau = dec.tau;
    rec.recovered = same_codeword(dec.codeword, sent);
    rec.tie_windows = dec.tie_events.size();
    rec.first_tie_count =
        (!dec.tie_events.empty() && dec.tie_events.front().t == 0) ? dec.tie_events.front().tie_count
                                                                   : 1;
    rec.mult_event = rec.first_tie_count >= cfg.mult_m;

    if (cfg.run_exact) {
        DecodeResult ex = exact_decode(code, chan.seq, cfg.budget);
        rec.exact_cost = ex.cost;
        rec.exact_recovered = same_codeword(ex.codeword, sent) ? 1 : 0;
        if (ex.cost > dec.cost)
            throw invariant_violation("experiment: exact decoder cost exceeds heuristic cost");
    }
    return rec;
}

} // namespace

ExperimentReport run_experiment(const ConvCode& code, const ExperimentConfig& config) {
    if (config.trials == 0) throw dimension_error("experiment: need at least one trial");
    if (config.message_len + code.kappa_max() < config.window)
        throw dimension_error("experiment: message too short for the decode window");

    WindowCode wc(code, config.window, config.budget);

    ExperimentReport report;
    report.config = config;
    report.horizon_T = config.message_len + code.kappa_max() - 1;
    report.bound = cost_bound(wc, report.horizon_T, config.stride);

    std::size_t delta_w = config.mult_delta ? config.mult_delta : config.window;
    if (delta_w >= config.window)
        report.mult_bound =
            multiplicity_bound(code, config.window, delta_w, config.mult_m, config.budget);

    report.records.resize(config.trials);
    std::size_t workers = std::max<std::size_t>(1, config.workers);
    if (workers == 1) {
        for (std::size_t i = 0; i < config.trials; ++i)
            report.records[i] = run_trial(code, wc, config, i);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errs(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < config.trials; i += workers)
                        report.records[i] = run_trial(code, wc, config, i);
                } catch (...) {
                    errs[w] = std::current_exception();
                }
            });
        for (std::thread& th : pool) th.join();
        for (std::exception_ptr& e : errs)
            if (e) std::rethrow_exception(e);
    }

    aggregate_report(report);
    return report;
}

void aggregate_report(ExperimentReport& report) {
    report.recovered_count = 0;
    report.mult_event_count = 0;
    report.tie_trial_count = 0;
    report.max_horizon_cost = 0;
    report.total_horizon_cost = 0;
    report.exact_agree_count = 0;
    for (const TrialRecord& r : report.records) {
        if (r.horizon_cost > report.bound)
            throw invariant_violation("experiment: horizon cost " + std::to_string(r.horizon_cost) +
                                      " exceeds bound " + std::to_string(report.bound));
        report.recovered_count += r.recovered;
        report.mult_event_count += r.mult_event;
        report.tie_trial_count += r.tie_windows > 0;
        report.max_horizon_cost = std::max(report.max_horizon_cost, r.horizon_cost);
        report.total_horizon_cost += r.horizon_cost;
        report.exact_agree_count += r.exact_recovered == 1 && r.recovered;
    }
}

namespace {

nlohmann::json channel_to_json(const ChannelSpec& c) {
    nlohmann::json j;
    j["kind"] = channel_kind_name(c.kind);
    switch (c.kind) {
        case ChannelKind::q_symmetric: j["p_err"] = c.p_err; break;
        case ChannelKind::per_window:
            j["weight"] = c.weight;
            j["stride"] = c.stride;
            break;
        case ChannelKind::explicit_errors: {
            nlohmann::json arr = nlohmann::json::array();
            for (const ErrorEntry& e : c.errors)
                arr.push_back({{"t", e.t}, {"coord", e.coord}, {"value", e.value}});
            j["errors"] = std::move(arr);
            break;
        }
        case ChannelKind::none: break;
    }
    return j;
}

ChannelSpec channel_from_json(const nlohmann::json& j) {
    ChannelSpec c;
    c.kind = channel_kind_from_name(j.value("kind", std::string("none")));
    switch (c.kind) {
        case ChannelKind::q_symmetric: c.p_err = j.at("p_err").get<double>(); break;
        case ChannelKind::per_window:
            c.weight = j.at("weight").get<std::size_t>();
            c.stride = j.at("stride").get<std::size_t>();
            break;
        case ChannelKind::explicit_errors:
            for (const nlohmann::json& e : j.at("errors"))
                c.errors.push_back(ErrorEntry{e.at("t").get<std::size_t>(),
                                              e.at("coord").get<std::size_t>(),
                                              e.at("value").get<Elem>()});
            break;
        case ChannelKind::none: break;
    }
    return c;
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    if (!cfg.code_json.empty()) j["code"] = nlohmann::json::parse(cfg.code_json);
    else if (!cfg.code_file.empty()) j["code_file"] = cfg.code_file;
    j["window"] = cfg.window;
    j["stride"] = cfg.stride;
    j["message_len"] = cfg.message_len;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["channel"] = channel_to_json(cfg.channel);
    // `workers` is deliberately not serialized: it changes scheduling only,
    // and manifests must reproduce byte-identical output at any worker count.
    j["run_exact"] = cfg.run_exact;
    j["budget"] = cfg.budget.max_enumeration;
    j["mult_m"] = cfg.mult_m;
    j["mult_delta"] = cfg.mult_delta;
    return j;
}

} // namespace

std::string config_json(const ExperimentConfig& config) { return config_to_json(config).dump(2); }

ExperimentConfig parse_config_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("config: ") + e.what());
    }
    ExperimentConfig cfg;
    try {
        if (j.contains("code")) cfg.code_json = j["code"].dump();
        if (j.contains("code_file")) cfg.code_file = j["code_file"].get<std::string>();
        cfg.window = j.value("window", cfg.window);
        cfg.stride = j.value("stride", cfg.stride);
        cfg.message_len = j.value("message_len", cfg.message_len);
        cfg.trials = j.value("trials", cfg.trials);
        cfg.seed = j.value("seed", cfg.seed);
        if (j.contains("channel")) cfg.channel = channel_from_json(j["channel"]);
        cfg.run_exact = j.value("run_exact", cfg.run_exact);
        cfg.workers = j.value("workers", cfg.workers);
        cfg.budget.max_enumeration = j.value("budget", cfg.budget.max_enumeration);
        cfg.mult_m = j.value("mult_m", cfg.mult_m);
        cfg.mult_delta = j.value("mult_delta", cfg.mult_delta);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("config: ") + e.what());
    }
    return cfg;
}

std::string manifest_json(const ExperimentConfig& config) {
    nlohmann::json j;
    j["tool"] = "rhcodec";
    j["version"] = RHCODEC_VERSION;
    j["config"] = config_to_json(config);
    return j.dump();
}

std::string report_csv(const ExperimentReport& report) {
    std::ostringstream os;
    os << "# manifest: " << manifest_json(report.config) << "\n";
    os << "# horizon_T=" << report.horizon_T << " bound=" << report.bound;
    if (report.mult_bound) os << " mult_bound=" << rational_str(*report.mult_bound);
    os << "\n";
    os << "trial,channel_weight,horizon_cost,full_cost,tau,recovered,tie_windows,"
          "first_tie_count,mult_event,exact_cost,exact_recovered\n";
    for (const TrialRecord& r : report.records) {
        os << r.trial << ',' << r.channel_weight << ',' << r.horizon_cost << ',' << r.full_cost
           << ',' << r.tau << ',' << int(r.recovered) << ',' << r.tie_windows << ','
           << r.first_tie_count << ',' << int(r.mult_event) << ',' << r.exact_cost << ','
           << r.exact_recovered << "\n";
    }
    return os.str();
}

std::string report_json(const ExperimentReport& report) {
    nlohmann::json j;
    j["manifest"] = nlohmann::json::parse(manifest_json(report.config));
    j["horizon_T"] = report.horizon_T;
    j["bound"] = report.bound;
    j["trials"] = report.records.size();
    j["recovered_count"] = report.recovered_count;
    j["mult_event_count"] = report.mult_event_count;
    j["tie_trial_count"] = report.tie_trial_count;
    j["max_horizon_cost"] = report.max_horizon_cost;
    j["total_horizon_cost"] = report.total_horizon_cost;
    j["exact_agree_count"] = report.exact_agree_count;
    if (report.mult_bound) {
        j["mult_bound"] = rational_str(*report.mult_bound);
        j["mult_bound_approx"] = rational_double(*report.mult_bound);
        j["mult_event_rate"] =
            static_cast<double>(report.mult_event_count) / static_cast<double>(report.records.size());
    }
    return j.dump(2);
}

} // namespace rhcodec
