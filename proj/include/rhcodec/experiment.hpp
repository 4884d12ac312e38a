#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rhcodec/budget.hpp"
#include "rhcodec/channel.hpp"
#include "rhcodec/conv_code.hpp"
#include "rhcodec/decode.hpp"
#include "rhcodec/density.hpp"

namespace rhcodec {

struct ExperimentConfig {
    // Compact JSON of the code spec, embedded in manifests so a run is
    // reproducible from its manifest alone.  A config file may instead name a
    // `code_file`, which the caller resolves into `code_json`.
    std::string code_json;
    std::string code_file;
    std::size_t window = 2;        // N
    std::size_t stride = 1;        // L
    std::size_t message_len = 20;  // random input symbols per trial
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    ChannelSpec channel;
    bool run_exact = false;
    std::size_t workers = 1;
    Budget budget;
    // Multiplicity tracking: an event is a first-window tie of at least
    // `mult_m` nearest codewords.  The theoretical bound uses windows
    // `window`..`mult_delta`.
    std::size_t mult_m = 2;
    std::size_t mult_delta = 0;  // 0 = same as `window`
};

struct TrialRecord {
    std::size_t trial = 0;
    long channel_weight = 0;    // errors actually introduced
    long horizon_cost = 0;      // decoder cost over times 0..T-1
    long full_cost = 0;         // including the zero-return tail
    std::size_t tau = 0;
    bool recovered = false;     // decoded codeword equals the transmitted one
    std::size_t tie_windows = 0;
    std::uint64_t first_tie_count = 1;
    bool mult_event = false;    // first window had >= mult_m nearest codewords
    long exact_cost = -1;       // -1 when the exact decoder was not run
    int exact_recovered = -1;   // -1 not run, else 0/1
};

struct ExperimentReport {
    ExperimentConfig config;
    std::size_t horizon_T = 0;  // decode horizon: times 0..T, costs over 0..T-1
    long bound = 0;             // ceil(T/L) * covering radius
    std::vector<TrialRecord> records;
    // Aggregates.
    std::size_t recovered_count = 0;
    std::size_t mult_event_count = 0;
    std::size_t tie_trial_count = 0;   // trials with any tie window
    long max_horizon_cost = 0;
    long total_horizon_cost = 0;
    std::size_t exact_agree_count = 0; // trials where both decoders recovered
    std::optional<Rational> mult_bound; // theoretical multiplicity probability bound
};

// Runs `config.trials` decoding trials of the receding-horizon decoder over a
// channel, deterministically in `config.seed` and independent of
// `config.workers`.
ExperimentReport run_experiment(const ConvCode& code, const ExperimentConfig& config);

// Recomputes the aggregate fields from `records`, throwing invariant_violation
// if any record breaks the per-horizon cost bound. Called by run_experiment;
// exposed so the enforcement itself can be exercised on corrupted records.
void aggregate_report(ExperimentReport& report);

// Deterministic serializations (no timing, byte-identical across runs).
std::string report_csv(const ExperimentReport& report);
std::string report_json(const ExperimentReport& report);
std::string config_json(const ExperimentConfig& config);
ExperimentConfig parse_config_json(const std::string& text);
std::string manifest_json(const ExperimentConfig& config);

} // namespace rhcodec
