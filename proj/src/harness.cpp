#include "mislab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mislab/fixtures.hpp"
#include "mislab/oracle.hpp"

namespace mislab {

using ordered_json = nlohmann::ordered_json;

namespace {

UndirectedGraph instance_for(const TrialRecord& r) {
    if (r.instance == "gnp") return random_gnp(r.n, r.p, r.seed);
    if (r.instance == "fixture:g10") return fixtures::g10();
    throw std::invalid_argument("unknown instance kind: " + r.instance);
}

int pick_threads(const CampaignConfig& cfg) {
    if (cfg.threads > 0) return cfg.threads;
    if (const char* env = std::getenv("MISLAB_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

}  // namespace

namespace {

TrialRecord run_trial_record(TrialRecord r, const CampaignConfig& cfg) {
    UndirectedGraph g = instance_for(r);
    r.instance_hash = g.adjacency_hash_hex();

    auto t0 = std::chrono::steady_clock::now();
    MmisResult res = solve_mmis(g, cfg.solver);
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    r.solver_size = res.claimed_mmis.count();
    r.rounds = res.rounds;

    if (r.n <= cfg.oracle_limit) {
        AlphaResult alpha = brute_force_alpha(g, cfg.oracle_limit);
        r.oracle_size = alpha.size;
        r.verdict = to_string(verify_result(g, res, alpha.size));
    } else {
        r.oracle_size = -1;
        r.verdict = "unverified";
    }
    return r;
}

}  // namespace

TrialRecord run_trial(int n, double p, uint64_t seed, const CampaignConfig& cfg) {
    TrialRecord r;
    r.n = n;
    r.p = p;
    r.seed = seed;
    return run_trial_record(std::move(r), cfg);
}

Report run_campaign(const CampaignConfig& cfg) {
    require(cfg.trials_per_cell >= 1, "at least one trial per cell");
    require(cfg.n_min >= 0 && cfg.n_min <= cfg.n_max, "bad vertex-count range");

    struct Cell {
        int n;
        double p;
    };
    std::vector<Cell> cells;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n)
        for (double p : cfg.p_grid) cells.push_back({n, p});

    const long total = long(cells.size()) * cfg.trials_per_cell;
    std::vector<TrialRecord> records(total);

    // Seeds depend only on the trial index, so any thread layout produces
    // the same records.
    auto worker = [&](long begin, long end) {
        for (long i = begin; i < end; ++i) {
            const Cell& cell = cells[i / cfg.trials_per_cell];
            records[i] = run_trial(cell.n, cell.p, cfg.base_seed + uint64_t(i), cfg);
        }
    };
    const int threads = std::min<long>(pick_threads(cfg), std::max<long>(total, 1));
    if (threads <= 1) {
        worker(0, total);
    } else {
        std::vector<std::thread> pool;
        long chunk = (total + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            long b = t * chunk, e = std::min(total, b + chunk);
            if (b < e) pool.emplace_back(worker, b, e);
        }
        for (auto& th : pool) th.join();
    }

    Report rep;
    rep.config = cfg;
    for (size_t c = 0; c < cells.size(); ++c) {
        CellStats s;
        s.n = cells[c].n;
        s.p = cells[c].p;
        std::vector<double> times;
        double rounds_sum = 0;
        for (int t = 0; t < cfg.trials_per_cell; ++t) {
            const TrialRecord& r = records[c * cfg.trials_per_cell + t];
            ++s.trials;
            rounds_sum += r.rounds;
            times.push_back(r.wall_ms);
            if (r.verdict == "confirmed") ++s.confirmed;
            else if (r.verdict == "counterexample-size") ++s.counterexample_size;
            else if (r.verdict == "counterexample-nontermination")
                ++s.counterexample_nontermination;
            else ++s.unverified;
            if (r.verdict != "confirmed" && r.verdict != "unverified")
                rep.non_confirmed.push_back(r);
        }
        s.mean_rounds = rounds_sum / s.trials;
        std::sort(times.begin(), times.end());
        for (double t : times) s.mean_ms += t;
        s.mean_ms /= times.size();
        s.p50_ms = times[times.size() / 2];
        s.p95_ms = times[size_t(double(times.size() - 1) * 0.95)];
        s.max_ms = times.back();
        rep.cells.push_back(s);
        rep.total_trials += s.trials;
        rep.total_confirmed += s.confirmed;
        rep.total_counterexample_size += s.counterexample_size;
        rep.total_counterexample_nontermination += s.counterexample_nontermination;
        rep.total_unverified += s.unverified;
    }

    if (!cfg.out_dir.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(cfg.out_dir);
        std::ofstream(fs::path(cfg.out_dir) / "report.json") << report_to_json(rep);
        std::ofstream(fs::path(cfg.out_dir) / "report.csv") << report_to_csv(rep);
        std::ofstream(fs::path(cfg.out_dir) / "report.txt") << report_to_text(rep);
        if (!rep.non_confirmed.empty()) {
            fs::create_directories(fs::path(cfg.out_dir) / "records");
            for (TrialRecord& r : rep.non_confirmed) {
                // A bad disk must not lose the in-memory campaign.
                try {
                    std::ostringstream name;
                    name << "n" << r.n << "_p" << r.p << "_s" << r.seed;
                    if (cfg.trace_failures) {
                        SolverConfig traced = cfg.solver;
                        traced.record_trace = true;
                        MmisResult res = solve_mmis(instance_for(r), traced);
                        fs::path tp =
                            fs::path(cfg.out_dir) / "records" / (name.str() + ".trace");
                        std::ofstream tf(tp);
                        for (const std::string& line : res.trace) tf << line << "\n";
                        r.trace_path = tp.string();
                    }
                    std::ofstream(fs::path(cfg.out_dir) / "records" / (name.str() + ".json"))
                        << record_to_json(r);
                } catch (const std::exception& e) {
                    std::ofstream(fs::path(cfg.out_dir) / "records" / "errors.log",
                                  std::ios::app)
                        << "record n=" << r.n << " seed=" << r.seed << ": " << e.what()
                        << "\n";
                }
            }
        }
    }
    return rep;
}

bool verify_record(const TrialRecord& r) {
    UndirectedGraph g = instance_for(r);
    if (g.adjacency_hash_hex() != r.instance_hash) return false;
    CampaignConfig cfg;
    cfg.oracle_limit = r.oracle_size >= 0 ? r.n : -1;  // honor the recorded oracle decision
    TrialRecord base = r;
    base.solver_size = base.oracle_size = base.rounds = 0;
    base.verdict.clear();
    base.instance_hash.clear();
    TrialRecord again = run_trial_record(std::move(base), cfg);
    return again.solver_size == r.solver_size && again.oracle_size == r.oracle_size &&
           again.verdict == r.verdict && again.rounds == r.rounds &&
           again.instance_hash == r.instance_hash;
}

namespace {

ordered_json record_json(const TrialRecord& r) {
    ordered_json j;
    j["schema_version"] = 1;
    j["n"] = r.n;
    j["p"] = r.p;
    j["seed"] = r.seed;
    j["instance"] = r.instance;
    j["instance_hash"] = r.instance_hash;
    j["solver_size"] = r.solver_size;
    j["oracle_size"] = r.oracle_size;
    j["verdict"] = r.verdict;
    j["rounds"] = r.rounds;
    j["trace_path"] = r.trace_path;
    return j;
}

}  // namespace

std::string report_to_json(const Report& r) {
    ordered_json j;
    j["schema_version"] = 1;
    j["config"] = {{"n_min", r.config.n_min},
                   {"n_max", r.config.n_max},
                   {"p_grid", r.config.p_grid},
                   {"trials_per_cell", r.config.trials_per_cell},
                   {"base_seed", r.config.base_seed},
                   {"oracle_limit", r.config.oracle_limit}};
    j["cells"] = ordered_json::array();
    for (const CellStats& s : r.cells) {
        ordered_json c;
        c["n"] = s.n;
        c["p"] = s.p;
        c["trials"] = s.trials;
        c["confirmed"] = s.confirmed;
        c["counterexample_size"] = s.counterexample_size;
        c["counterexample_nontermination"] = s.counterexample_nontermination;
        c["unverified"] = s.unverified;
        c["mean_rounds"] = s.mean_rounds;
        j["cells"].push_back(c);
    }
    j["totals"] = {{"trials", r.total_trials},
                   {"confirmed", r.total_confirmed},
                   {"counterexample_size", r.total_counterexample_size},
                   {"counterexample_nontermination", r.total_counterexample_nontermination},
                   {"unverified", r.total_unverified}};
    j["non_confirmed"] = ordered_json::array();
    for (const TrialRecord& rec : r.non_confirmed) j["non_confirmed"].push_back(record_json(rec));
    return j.dump(2) + "\n";
}

std::string report_to_csv(const Report& r) {
    std::ostringstream out;
    out << "n,p,trials,confirmed,counterexample_size,counterexample_nontermination,"
           "unverified,mean_rounds,mean_ms,p50_ms,p95_ms,max_ms\n";
    for (const CellStats& s : r.cells)
        out << s.n << "," << s.p << "," << s.trials << "," << s.confirmed << ","
            << s.counterexample_size << "," << s.counterexample_nontermination << ","
            << s.unverified << "," << s.mean_rounds << "," << s.mean_ms << "," << s.p50_ms
            << "," << s.p95_ms << "," << s.max_ms << "\n";
    return out.str();
}

std::string report_to_text(const Report& r) {
    std::ostringstream out;
    out << "campaign: n in [" << r.config.n_min << ", " << r.config.n_max << "], "
        << r.config.trials_per_cell << " trials per cell, base seed " << r.config.base_seed
        << "\n\n";
    out << "   n      p  confirmed/total  mean_rounds  mean_ms  p95_ms\n";
    for (const CellStats& s : r.cells) {
        std::ostringstream frac;
        frac << s.confirmed << "/" << s.trials;
        out << "  " << s.n << "  " << s.p << "  " << frac.str() << "  " << s.mean_rounds
            << "  " << s.mean_ms << "  " << s.p95_ms << "\n";
    }
    out << "\ntotals: " << r.total_confirmed << " confirmed, " << r.total_counterexample_size
        << " size counterexamples, " << r.total_counterexample_nontermination
        << " nontermination, " << r.total_unverified << " unverified, of " << r.total_trials
        << " trials\n";
    return out.str();
}

std::string emit_report(const Report& r, const std::string& format) {
    if (format == "json") return report_to_json(r);
    if (format == "csv") return report_to_csv(r);
    if (format == "text") return report_to_text(r);
    throw std::invalid_argument("unknown report format: " + format);
}

std::string record_to_json(const TrialRecord& r) {
    return record_json(r).dump(2) + "\n";
}

TrialRecord record_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    require(j.at("schema_version").get<int>() == 1, "unknown record schema version");
    TrialRecord r;
    r.n = j.at("n").get<int>();
    r.p = j.at("p").get<double>();
    r.seed = j.at("seed").get<uint64_t>();
    r.instance = j.at("instance").get<std::string>();
    r.instance_hash = j.at("instance_hash").get<std::string>();
    r.solver_size = j.at("solver_size").get<int>();
    r.oracle_size = j.at("oracle_size").get<int>();
    r.verdict = j.at("verdict").get<std::string>();
    r.rounds = j.at("rounds").get<int>();
    r.trace_path = j.value("trace_path", "");
    return r;
}

}  // namespace mislab
