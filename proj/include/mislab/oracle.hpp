#pragma once

#include <vector>

#include "mislab/dag.hpp"

namespace mislab {

struct AlphaResult {
    int size = 0;
    Bitset witness;
};

// Exact maximum independent set by branch and bound on the highest-degree
// candidate, seeded with the greedy lower bound. Deterministic. Rejects
// graphs above `limit` vertices.
AlphaResult brute_force_alpha(const UndirectedGraph& g, int limit = 26);

// Plain subset scan; exists to validate the branch and bound.
AlphaResult alpha_exhaustive(const UndirectedGraph& g, int limit = 20);

// Largest set of pairwise unreachable vertices.
int brute_force_max_antichain(const TransitiveClosure& tc, int limit = 16);

// Every maximum antichain, in ascending subset order.
std::vector<Bitset> enumerate_max_antichains(const TransitiveClosure& tc, int limit = 12);

}  // namespace mislab
