#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mislab/fixtures.hpp"
#include "mislab/harness.hpp"
#include "mislab/oracle.hpp"

using namespace mislab;

namespace {

std::vector<double> parse_grid(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    require(!out.empty(), "empty probability grid");
    return out;
}

int cmd_gen(int n, double p, uint64_t seed, const std::string& out_path,
            const std::string& format) {
    UndirectedGraph g = random_gnp(n, p, seed);
    std::ostringstream comment;
    comment << "gnp n=" << n << " p=" << p << " seed=" << seed;
    std::ofstream out(out_path);
    require(bool(out), "cannot open output file: " + out_path);
    if (format == "edges") write_edge_list(out, g);
    else write_dimacs(out, g, comment.str());
    std::cerr << "wrote " << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges to " << out_path << "\n";
    return 0;
}

int cmd_solve(const std::string& input, const std::string& trace_path, bool as_json) {
    UndirectedGraph g = read_graph_file(input);
    SolverConfig cfg;
    cfg.record_trace = !trace_path.empty();

    auto t0 = std::chrono::steady_clock::now();
    MmisResult res = solve_mmis(g, cfg);
    double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (!trace_path.empty()) {
        std::ofstream tf(trace_path);
        require(bool(tf), "cannot open trace file: " + trace_path);
        for (const std::string& line : res.trace) tf << line << "\n";
    }

    std::vector<int> members;
    for (int v : res.claimed_mmis.to_vector()) members.push_back(v + 1);
    if (as_json) {
        nlohmann::ordered_json j;
        j["instance_hash"] = g.adjacency_hash_hex();
        j["size"] = res.claimed_mmis.count();
        j["members"] = members;
        j["rounds"] = res.rounds;
        j["status"] = to_string(res.status);
        j["wall_ms"] = wall_ms;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "size " << res.claimed_mmis.count() << " (" << to_string(res.status)
                  << ", " << res.rounds << " rounds)\nmembers:";
        for (int v : members) std::cout << " " << v;
        std::cout << "\n";
    }
    return res.status == SolveStatus::completed ? 0 : 2;
}

int cmd_hunt(const CampaignConfig& cfg) {
    Report rep = run_campaign(cfg);
    std::cout << report_to_text(rep);
    if (!cfg.out_dir.empty())
        std::cout << "reports written to " << cfg.out_dir << "\n";
    return rep.total_counterexample_size + rep.total_counterexample_nontermination == 0 ? 0 : 3;
}

int cmd_verify(const std::string& record_path) {
    std::ifstream in(record_path);
    require(bool(in), "cannot open record file: " + record_path);
    std::stringstream buf;
    buf << in.rdbuf();
    TrialRecord rec = record_from_json(buf.str());
    bool ok = verify_record(rec);
    std::cout << (ok ? "record replays cleanly" : "record is stale or corrupt") << "\n";
    return ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact maximum independent set via layered orientations and chain partitions"};
    app.require_subcommand(1);

    int n = 10;
    double p = 0.5;
    uint64_t seed = 1;
    std::string out_path, format = "dimacs", input, trace_path, record_path, p_csv;
    bool as_json = false;
    CampaignConfig hunt_cfg;

    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--p", p, "edge probability")->required();
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--out", out_path, "output path")->required();
    gen->add_option("--format", format, "dimacs or edges");

    auto* solve = app.add_subcommand("solve", "solve one instance");
    solve->add_option("--input", input, "DIMACS or edge-list file")->required();
    solve->add_option("--trace", trace_path, "write the solver trace here");
    solve->add_flag("--json", as_json, "emit the result as JSON");

    auto* hunt = app.add_subcommand("hunt", "random-instance campaign against the oracle");
    hunt->add_option("--n-min", hunt_cfg.n_min, "smallest vertex count");
    hunt->add_option("--n-max", hunt_cfg.n_max, "largest vertex count");
    hunt->add_option("--p", p_csv, "comma-separated edge probabilities");
    hunt->add_option("--trials", hunt_cfg.trials_per_cell, "trials per (n, p) cell");
    hunt->add_option("--seed", hunt_cfg.base_seed, "base seed");
    hunt->add_option("--oracle-limit", hunt_cfg.oracle_limit, "largest n the oracle checks");
    hunt->add_option("--out-dir", hunt_cfg.out_dir, "directory for reports and records");
    hunt->add_option("--threads", hunt_cfg.threads, "trial parallelism (0: MISLAB_THREADS)");

    auto* verify = app.add_subcommand("verify", "replay a stored trial record");
    verify->add_option("--record", record_path, "record JSON file")->required();

    auto* fixtures_cmd = app.add_subcommand("fixtures", "run the golden fixture suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(n, p, seed, out_path, format);
        if (solve->parsed()) return cmd_solve(input, trace_path, as_json);
        if (hunt->parsed()) {
            if (!p_csv.empty()) hunt_cfg.p_grid = parse_grid(p_csv);
            return cmd_hunt(hunt_cfg);
        }
        if (verify->parsed()) return cmd_verify(record_path);
        if (fixtures_cmd->parsed()) return fixtures::run_golden_suite(std::cout) ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
