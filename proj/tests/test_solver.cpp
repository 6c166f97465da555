#include <doctest.h>

#include "mislab/fixtures.hpp"
#include "mislab/oracle.hpp"
#include "mislab/solver.hpp"

using namespace mislab;
using fixtures::set1;

namespace {

OrientedDag three_chain() {
    UndirectedGraph g = UndirectedGraph::from_edges(3, {{0, 1}, {1, 2}});
    std::vector<Bitset> layers;
    for (int v = 0; v < 3; ++v) {
        Bitset s(3);
        s.set(v);
        layers.push_back(s);
    }
    return orient_by_layering(g, layers);
}

}  // namespace

TEST_CASE("conjecture step on the saturated ten-vertex digraph") {
    OrientedDag d = fixtures::d10_saturated();
    TransitiveClosure tc = transitive_closure(d);

    ConjectureOutcome a = conjecture_step(d, tc, 0, 5);  // (1,6): remainder {3,4,7}
    CHECK(a.kind == ConjectureOutcome::Kind::rejected);
    CHECK(a.z0_size == 2);

    ConjectureOutcome b = conjecture_step(d, tc, 3, 8);  // (4,9): remainder {1,5,8}
    CHECK(b.kind == ConjectureOutcome::Kind::rejected);
    CHECK(b.z0_size == 2);

    for (auto [i, j] : tc.fictitious_cells())
        CHECK(conjecture_step(d, tc, i, j).kind == ConjectureOutcome::Kind::rejected);

    CHECK_THROWS_AS(conjecture_step(d, tc, 0, 4), std::invalid_argument);
}

TEST_CASE("conjecture step with an empty remainder") {
    OrientedDag chain = three_chain();
    TransitiveClosure tc = transitive_closure(chain);
    ConjectureOutcome out = conjecture_step(chain, tc, 0, 2);
    CHECK(out.kind == ConjectureOutcome::Kind::empty_remainder);
}

TEST_CASE("solving fixed instances") {
    MmisResult ten = solve_mmis(fixtures::g10());
    CHECK(ten.status == SolveStatus::completed);
    CHECK(ten.claimed_mmis == set1(10, {1, 2, 3, 4}));
    CHECK(ten.rounds == 0);
    CHECK(ten.fictitious_arcs_examined == 5);

    MmisResult flat = solve_mmis(UndirectedGraph(6));
    CHECK(flat.claimed_mmis == Bitset::full(6));
    CHECK(flat.rounds == 0);

    MmisResult k5 = solve_mmis(UndirectedGraph(5).complement());
    CHECK(k5.claimed_mmis.count() == 1);
}

TEST_CASE("verdicts") {
    UndirectedGraph g = fixtures::g10();
    MmisResult r = solve_mmis(g);
    CHECK(verify_result(g, r, 4) == Verdict::confirmed);

    MmisResult small = r;
    small.claimed_mmis = greedy_complete_to_mis(g, set1(10, {5, 7, 8, 10}));
    CHECK(verify_result(g, small, 5) == Verdict::counterexample_size);

    MmisResult capped = r;
    capped.status = SolveStatus::cap_exceeded;
    CHECK(verify_result(g, capped, 4) == Verdict::counterexample_nontermination);

    // A claimed set larger than the exact optimum means the oracle lied.
    UndirectedGraph pair(2);
    MmisResult fat;
    fat.claimed_mmis = Bitset::full(2);
    CHECK_THROWS_AS(verify_result(pair, fat, 1), std::logic_error);

    // Non-maximal claims are rejected outright.
    MmisResult loose;
    loose.claimed_mmis = Bitset(2);
    CHECK_THROWS_AS(verify_result(pair, loose, 2), std::logic_error);
}

TEST_CASE("solver output is always a safe maximal independent set") {
    for (uint64_t seed = 0; seed < 80; ++seed) {
        int n = 1 + int(seed % 14);
        double p = 0.1 + 0.08 * double(seed % 10);
        UndirectedGraph g = random_gnp(n, p, seed + 202);
        MmisResult r = solve_mmis(g);
        CHECK(is_mis(g, r.claimed_mmis));
        int alpha = brute_force_alpha(g).size;
        CHECK(r.claimed_mmis.count() <= alpha);
        CHECK(r.rounds <= n);
        // Determinism.
        MmisResult again = solve_mmis(g);
        CHECK(again.claimed_mmis == r.claimed_mmis);
        CHECK(again.rounds == r.rounds);
        CHECK(again.fictitious_arcs_examined == r.fictitious_arcs_examined);
    }
}

TEST_CASE("improvement rounds strictly grow the claimed set") {
    // Find instances whose initial saturation is not yet optimal.
    int improved_runs = 0;
    for (uint64_t seed = 0; seed < 300 && improved_runs < 5; ++seed) {
        UndirectedGraph g = random_gnp(12, 0.3, seed);
        MmisResult r = solve_mmis(g);
        if (r.rounds == 0) continue;
        ++improved_runs;
        CHECK(r.status == SolveStatus::completed);
        CHECK(r.claimed_mmis.count() == brute_force_alpha(g).size);
    }
    CHECK(improved_runs > 0);  // the loop actually exercises accepted arcs
}

TEST_CASE("a saturation cap yields a partial but honest result") {
    UndirectedGraph g = random_gnp(12, 0.5, 0);  // saturating needs four cuts
    SolverConfig cfg;
    cfg.vs_caps.max_cuts = 1;
    MmisResult r = solve_mmis(g, cfg);
    CHECK(r.status == SolveStatus::cap_exceeded);
    CHECK(is_mis(g, r.claimed_mmis));
    CHECK(verify_result(g, r, brute_force_alpha(g).size) ==
          Verdict::counterexample_nontermination);
}

TEST_CASE("solver trace records the run when asked") {
    SolverConfig cfg;
    cfg.record_trace = true;
    MmisResult r = solve_mmis(fixtures::g10(), cfg);
    CHECK(!r.trace.empty());
    CHECK(solve_mmis(fixtures::g10()).trace.empty());
}
