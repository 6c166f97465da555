#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include <json.hpp>

#include "mislab/fixtures.hpp"
#include "mislab/harness.hpp"

using namespace mislab;

namespace {

CampaignConfig small_campaign() {
    CampaignConfig cfg;
    cfg.n_min = 4;
    cfg.n_max = 8;
    cfg.p_grid = {0.0, 0.3, 0.7};
    cfg.trials_per_cell = 10;
    cfg.base_seed = 99;
    cfg.threads = 1;
    return cfg;
}

}  // namespace

TEST_CASE("single-vertex cells always confirm") {
    CampaignConfig cfg;
    cfg.n_min = cfg.n_max = 1;
    cfg.p_grid = {0.0, 0.5, 1.0};
    cfg.trials_per_cell = 5;
    cfg.threads = 1;
    Report rep = run_campaign(cfg);
    CHECK(rep.total_trials == 15);
    CHECK(rep.total_confirmed == 15);
    CHECK(rep.non_confirmed.empty());
}

TEST_CASE("p = 0 cells solve to the full vertex set") {
    CampaignConfig cfg;
    cfg.n_min = 5;
    cfg.n_max = 5;
    cfg.p_grid = {0.0};
    cfg.trials_per_cell = 3;
    cfg.threads = 1;
    for (int i = 0; i < cfg.trials_per_cell; ++i) {
        TrialRecord r = run_trial(5, 0.0, cfg.base_seed + i, cfg);
        CHECK(r.solver_size == 5);
        CHECK(r.oracle_size == 5);
        CHECK(r.verdict == "confirmed");
    }
    Report rep = run_campaign(cfg);
    CHECK(rep.total_confirmed == 3);
}

TEST_CASE("reports are byte-identical across reruns and thread counts") {
    CampaignConfig cfg = small_campaign();
    std::string first = report_to_json(run_campaign(cfg));
    std::string second = report_to_json(run_campaign(cfg));
    CHECK(first == second);

    CampaignConfig wide = cfg;
    wide.threads = 4;
    CHECK(report_to_json(run_campaign(wide)) == first);

    CampaignConfig other = cfg;
    other.base_seed = 100;
    CHECK(report_to_json(run_campaign(other)) != first);
}

TEST_CASE("aggregates equal the per-record sums") {
    Report rep = run_campaign(small_campaign());
    long cells_total = 0, cells_confirmed = 0;
    for (const CellStats& c : rep.cells) {
        cells_total += c.trials;
        cells_confirmed += c.confirmed;
        CHECK(c.trials == c.confirmed + c.counterexample_size +
                              c.counterexample_nontermination + c.unverified);
    }
    CHECK(cells_total == rep.total_trials);
    CHECK(cells_confirmed == rep.total_confirmed);
}

TEST_CASE("records replay bit for bit") {
    CampaignConfig cfg;
    TrialRecord r = run_trial(11, 0.45, 12345, cfg);
    CHECK(verify_record(r));

    TrialRecord tampered = r;
    tampered.solver_size += 1;
    CHECK(!verify_record(tampered));

    TrialRecord wrong_hash = r;
    wrong_hash.instance_hash[0] = wrong_hash.instance_hash[0] == '0' ? '1' : '0';
    CHECK(!verify_record(wrong_hash));

    // Named fixture instance: the seed field is unused.
    TrialRecord fx;
    fx.n = 10;
    fx.instance = "fixture:g10";
    fx.instance_hash = fixtures::g10().adjacency_hash_hex();
    fx.solver_size = 4;
    fx.oracle_size = 4;
    fx.verdict = "confirmed";
    fx.rounds = 0;
    CHECK(verify_record(fx));
}

TEST_CASE("unverified trials skip the oracle") {
    CampaignConfig cfg;
    cfg.oracle_limit = 8;
    TrialRecord r = run_trial(12, 0.5, 7, cfg);
    CHECK(r.oracle_size == -1);
    CHECK(r.verdict == "unverified");
    CHECK(verify_record(r));  // replay honors the recorded oracle decision
}

TEST_CASE("record JSON round trip") {
    CampaignConfig cfg;
    TrialRecord r = run_trial(9, 0.6, 31, cfg);
    TrialRecord back = record_from_json(record_to_json(r));
    CHECK(back.n == r.n);
    CHECK(back.p == r.p);
    CHECK(back.seed == r.seed);
    CHECK(back.instance == r.instance);
    CHECK(back.instance_hash == r.instance_hash);
    CHECK(back.solver_size == r.solver_size);
    CHECK(back.oracle_size == r.oracle_size);
    CHECK(back.verdict == r.verdict);
    CHECK(back.rounds == r.rounds);
    CHECK(record_to_json(back) == record_to_json(r));
}

TEST_CASE("campaign output directory") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "mislab_harness_test";
    fs::remove_all(dir);
    CampaignConfig cfg = small_campaign();
    cfg.out_dir = dir.string();
    run_campaign(cfg);
    CHECK(fs::exists(dir / "report.json"));
    CHECK(fs::exists(dir / "report.csv"));
    CHECK(fs::exists(dir / "report.txt"));
    CHECK(!fs::exists(dir / "records"));  // nothing non-confirmed to record
    fs::remove_all(dir);
}

TEST_CASE("thread count falls back to the environment") {
    setenv("MISLAB_THREADS", "3", 1);
    CampaignConfig cfg = small_campaign();
    cfg.threads = 0;
    std::string via_env = report_to_json(run_campaign(cfg));
    unsetenv("MISLAB_THREADS");
    cfg.threads = 1;
    CHECK(report_to_json(run_campaign(cfg)) == via_env);
}

TEST_CASE("report emission") {
    CampaignConfig empty;
    empty.p_grid = {};
    empty.n_min = empty.n_max = 3;
    empty.threads = 1;
    Report none = run_campaign(empty);
    CHECK(none.total_trials == 0);
    CHECK(!report_to_json(none).empty());

    Report rep = run_campaign(small_campaign());
    std::string json = emit_report(rep, "json");
    std::string csv = emit_report(rep, "csv");
    std::string text = emit_report(rep, "text");
    CHECK(json == report_to_json(rep));
    CHECK(csv.find("n,p,trials,confirmed") == 0);
    CHECK(text.find("confirmed/total") != std::string::npos);
    CHECK_THROWS_AS(emit_report(rep, "xml"), std::invalid_argument);

    // JSON parses back to the same document.
    auto parsed = nlohmann::ordered_json::parse(json);
    CHECK(parsed.dump(2) + "\n" == json);
    CHECK(parsed.at("schema_version").get<int>() == 1);
    CHECK(parsed.at("totals").at("trials").get<long>() == rep.total_trials);
}
