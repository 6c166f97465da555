#pragma once

#include <initializer_list>
#include <iosfwd>

#include "mislab/chains.hpp"

namespace mislab::fixtures {

// Vertex set from 1-based labels.
Bitset set1(int n, std::initializer_list<int> members);

// The canonical 10-vertex instance used throughout the golden tests:
// 14 edges, independence number 4.
UndirectedGraph g10();
// Its greedy layered orientation (layers {1,2,3,4} {5,6,7} {8,9} {10}).
OrientedDag d10();
// The saturated reorientation of d10 (layers {1,2,3,4} {5,7,8,10} {6} {9}).
OrientedDag d10_saturated();

// Five-element strict order with relation
// {(1,2), (1,3), (1,5), (4,2), (5,2)}; elements 1 and 2 belong to no
// maximum antichain.
TransitiveClosure p5();

// Six-vertex graph whose closure admits chain partitions with and without
// fictitious pairs inside a chain.
UndirectedGraph fig_six();
OrientedDag fig_six_dag();
// Chains {2,3,5} {1,4,6}: both carry a fictitious pair.
ChainPartition fig_six_partition_marked(const TransitiveClosure& tc);
// Chains {1,3,5} {2,4,6}: clean, each chain a triangle.
ChainPartition fig_six_partition_clean(const TransitiveClosure& tc);

// Runs the golden fixture checks, printing one line per check; returns
// true when all pass.
bool run_golden_suite(std::ostream& out);

}  // namespace mislab::fixtures
