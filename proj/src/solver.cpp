#include "mislab/solver.hpp"

#include <sstream>

namespace mislab {

namespace {

std::string set_str(const Bitset& s) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int v = s.first(); v != -1; v = s.next(v)) {
        if (!first) out << ",";
        out << (v + 1);
        first = false;
    }
    out << "}";
    return out.str();
}

}  // namespace

ConjectureOutcome conjecture_step(const OrientedDag& d, const TransitiveClosure& tc, int i,
                                  int j, const VsCaps& caps) {
    require(tc.is_fictitious(i, j), "conjecture step needs a fictitious pair");
    OrientedDag remainder = remove_closed_neighborhoods(d, tc, i, j);
    if (remainder.vertices().none()) return {ConjectureOutcome::Kind::empty_remainder, {}, 0};

    OrientedDag saturated = saturate(remainder, caps).dag;
    const int z0 = saturated.initiating().count();
    if (z0 < d.initiating().count() - 1) return {ConjectureOutcome::Kind::rejected, {}, z0};

    Bitset w = saturated.initiating();
    w.set(i);
    w.set(j);
    ensure(is_independent(d.base(), w),
           "Z0 and the fictitious endpoints must form an independent set");
    ensure(w.count() >= d.initiating().count() + 1, "accepted set must beat the initiating set");
    return {ConjectureOutcome::Kind::improved, std::move(w), z0};
}

MmisResult solve_mmis(const UndirectedGraph& g, const SolverConfig& cfg) {
    const int n = g.vertex_count();
    const int max_rounds = cfg.max_outer_rounds > 0 ? cfg.max_outer_rounds : n + 1;
    MmisResult result;
    auto log = [&](const std::string& line) {
        if (cfg.record_trace) result.trace.push_back(line);
    };

    OrientedDag d = orient_by_layering(g, initial_layering(g));
    log("initial orientation:\n" + debug_dump(d));

    try {
        while (true) {
            SaturateResult sat = saturate(d, cfg.vs_caps);
            d = std::move(sat.dag);
            if (cfg.record_trace)
                for (const std::string& line : sat.trace.to_lines()) log("  vs: " + line);
            log("saturated; initiating " + set_str(d.initiating()));
            TransitiveClosure tc = transitive_closure(d);

            // Scanning the fictitious cells of this closure in ascending
            // order and stopping at the first acceptance is exactly the
            // mark-and-skip bookkeeping: marks die with the closure.
            bool improved = false;
            for (auto [i, j] : tc.fictitious_cells()) {
                ++result.fictitious_arcs_examined;
                ConjectureOutcome out = conjecture_step(d, tc, i, j, cfg.vs_caps);
                if (out.kind == ConjectureOutcome::Kind::improved) {
                    log("arc " + std::to_string(i + 1) + " >> " + std::to_string(j + 1) +
                        " accepted; cutting " + set_str(out.enlarged));
                    d = cut(d, out.enlarged);
                    ++result.rounds;
                    improved = true;
                    break;
                }
                log("arc " + std::to_string(i + 1) + " >> " + std::to_string(j + 1) +
                    " rejected (|Z0| = " + std::to_string(out.z0_size) + ")");
            }
            if (!improved) break;
            if (result.rounds > max_rounds) {
                result.status = SolveStatus::cap_exceeded;
                break;
            }
        }
    } catch (const SaturationCapExceeded&) {
        result.status = SolveStatus::cap_exceeded;
        log("saturation cut cap exceeded");
    }

    // The initiating set is independent by construction; completing it
    // keeps the result maximal even when a cap fired mid-run.
    result.claimed_mmis = greedy_complete_to_mis(g, d.initiating());
    ensure(is_mis(g, result.claimed_mmis), "claimed set must be a maximal independent set");
    log("claimed " + set_str(result.claimed_mmis));
    return result;
}

Verdict verify_result(const UndirectedGraph& g, const MmisResult& r, int oracle_alpha) {
    const int size = r.claimed_mmis.count();
    ensure(is_mis(g, r.claimed_mmis), "result must carry a maximal independent set");
    ensure(size <= oracle_alpha, "solver exceeded the exact optimum: oracle bug");
    if (r.status == SolveStatus::cap_exceeded) return Verdict::counterexample_nontermination;
    return size == oracle_alpha ? Verdict::confirmed : Verdict::counterexample_size;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::confirmed: return "confirmed";
        case Verdict::counterexample_size: return "counterexample-size";
        case Verdict::counterexample_nontermination: return "counterexample-nontermination";
    }
    return "?";
}

std::string to_string(SolveStatus s) {
    return s == SolveStatus::completed ? "completed" : "cap-exceeded";
}

}  // namespace mislab
