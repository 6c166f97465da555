#pragma once

#include <string>
#include <vector>

#include "mislab/saturate.hpp"

namespace mislab {

struct SolverConfig {
    int max_outer_rounds = 0;  // 0 means n + 1; growth makes more impossible
    VsCaps vs_caps;
    bool record_trace = false;
};

enum class SolveStatus { completed, cap_exceeded };

struct MmisResult {
    Bitset claimed_mmis;  // always an independent, maximal set
    int rounds = 0;       // accepted improvement rounds
    long fictitious_arcs_examined = 0;
    SolveStatus status = SolveStatus::completed;
    std::vector<std::string> trace;
};

struct ConjectureOutcome {
    enum class Kind { improved, rejected, empty_remainder };
    Kind kind = Kind::rejected;
    Bitset enlarged;  // the independent set W on improvement
    int z0_size = 0;
};

// For a fictitious pair (i, j) of a saturated digraph: removes the two
// closed neighborhoods, saturates the remainder and tests whether its
// initiating set Z0 satisfies |Z0| >= |V0| - 1. On success the returned
// set Z0 | {i, j} is independent and beats |V0|.
ConjectureOutcome conjecture_step(const OrientedDag& d, const TransitiveClosure& tc, int i,
                                  int j, const VsCaps& caps = {});

// Orient, saturate, then scan fictitious arcs in ascending order; each
// accepted arc cuts the enlarged independent set into the digraph and
// restarts the scan on the re-saturated result. The initiating set of the
// final digraph is the claimed maximum independent set.
MmisResult solve_mmis(const UndirectedGraph& g, const SolverConfig& cfg = {});

enum class Verdict { confirmed, counterexample_size, counterexample_nontermination };

// oracle_alpha must be the exact independence number.
Verdict verify_result(const UndirectedGraph& g, const MmisResult& r, int oracle_alpha);

std::string to_string(Verdict v);
std::string to_string(SolveStatus s);

}  // namespace mislab
