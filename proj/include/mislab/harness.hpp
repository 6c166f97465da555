#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mislab/solver.hpp"

namespace mislab {

struct CampaignConfig {
    int n_min = 6, n_max = 18;
    std::vector<double> p_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    int trials_per_cell = 200;
    uint64_t base_seed = 1;
    int oracle_limit = 26;  // above it, trials are recorded unverified
    SolverConfig solver;
    int threads = 0;            // 0: MISLAB_THREADS env, then hardware
    std::string out_dir;        // empty: keep everything in memory
    bool trace_failures = true; // write a replay trace per non-confirmed record
};

struct TrialRecord {
    int n = 0;
    double p = 0.0;
    uint64_t seed = 0;
    std::string instance = "gnp";  // or "fixture:<name>"
    std::string instance_hash;
    int solver_size = 0;
    int oracle_size = -1;  // -1: oracle skipped
    std::string verdict;   // confirmed | counterexample-size |
                           // counterexample-nontermination | unverified
    int rounds = 0;
    double wall_ms = 0.0;  // informational; never part of replay checks
    std::string trace_path;
};

struct CellStats {
    int n = 0;
    double p = 0.0;
    int trials = 0;
    int confirmed = 0;
    int counterexample_size = 0;
    int counterexample_nontermination = 0;
    int unverified = 0;
    double mean_rounds = 0.0;
    // Wall-clock summary; excluded from the deterministic JSON report.
    double mean_ms = 0.0, p50_ms = 0.0, p95_ms = 0.0, max_ms = 0.0;
};

struct Report {
    CampaignConfig config;
    std::vector<CellStats> cells;
    std::vector<TrialRecord> non_confirmed;
    long total_trials = 0;
    long total_confirmed = 0;
    long total_counterexample_size = 0;
    long total_counterexample_nontermination = 0;
    long total_unverified = 0;
};

// One solver-vs-oracle run on the instance that (n, p, seed) regenerates.
TrialRecord run_trial(int n, double p, uint64_t seed, const CampaignConfig& cfg);

// Runs trials_per_cell solver+oracle trials per (n, p) cell with seeds
// base_seed + index; aggregation is independent of execution order.
Report run_campaign(const CampaignConfig& cfg);

// Regenerates the record's instance and re-runs solver and oracle;
// true when everything matches the stored record (wall time excluded).
bool verify_record(const TrialRecord& r);

// Stable field order. The JSON form carries no wall-clock data, so equal
// seeds give byte-identical output; timing lives in the csv/text forms.
std::string report_to_json(const Report& r);
std::string report_to_csv(const Report& r);
std::string report_to_text(const Report& r);
std::string emit_report(const Report& r, const std::string& format);  // json|csv|text

std::string record_to_json(const TrialRecord& r);
TrialRecord record_from_json(const std::string& text);

}  // namespace mislab
