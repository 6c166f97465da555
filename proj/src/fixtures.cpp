#include "mislab/fixtures.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "mislab/oracle.hpp"
#include "mislab/saturate.hpp"
#include "mislab/solver.hpp"

namespace mislab::fixtures {

Bitset set1(int n, std::initializer_list<int> members) {
    Bitset s(n);
    for (int v : members) s.set(v - 1);
    return s;
}

UndirectedGraph g10() {
    std::vector<std::pair<int, int>> edges = {{1, 5}, {1, 8}, {2, 5},  {2, 6}, {2, 9},
                                              {2, 10}, {3, 7}, {3, 9},  {4, 7}, {4, 10},
                                              {6, 8},  {6, 9}, {6, 10}, {9, 10}};
    for (auto& [u, v] : edges) {
        --u;
        --v;
    }
    return UndirectedGraph::from_edges(10, edges);
}

OrientedDag d10() {
    UndirectedGraph g = g10();
    return orient_by_layering(g, initial_layering(g));
}

OrientedDag d10_saturated() {
    UndirectedGraph g = g10();
    std::vector<Bitset> layers = {set1(10, {1, 2, 3, 4}), set1(10, {5, 7, 8, 10}),
                                  set1(10, {6}), set1(10, {9})};
    return orient_by_layering(g, layers);
}

TransitiveClosure p5() {
    TransitiveClosure tc;
    tc.n = 5;
    tc.verts = Bitset::full(5);
    tc.reach.assign(5, Bitset(5));
    tc.essential.assign(5, Bitset(5));
    auto arc = [&tc](int a, int b, bool ess) {
        tc.reach[a - 1].set(b - 1);
        if (ess) tc.essential[a - 1].set(b - 1);
    };
    arc(1, 3, true);
    arc(1, 5, true);
    arc(4, 2, true);
    arc(5, 2, true);
    arc(1, 2, false);  // via 5
    return tc;
}

UndirectedGraph fig_six() {
    std::vector<std::pair<int, int>> edges = {{1, 3}, {1, 4}, {1, 5}, {2, 3},
                                              {2, 4}, {2, 6}, {3, 5}, {4, 6}};
    for (auto& [u, v] : edges) {
        --u;
        --v;
    }
    return UndirectedGraph::from_edges(6, edges);
}

OrientedDag fig_six_dag() {
    UndirectedGraph g = fig_six();
    std::vector<Bitset> layers = {set1(6, {1, 2}), set1(6, {3, 4}), set1(6, {5, 6})};
    return orient_by_layering(g, layers);
}

ChainPartition fig_six_partition_marked(const TransitiveClosure& tc) {
    return partition_from_chains({{1, 2, 4}, {0, 3, 5}}, tc);
}

ChainPartition fig_six_partition_clean(const TransitiveClosure& tc) {
    return partition_from_chains({{0, 2, 4}, {1, 3, 5}}, tc);
}

namespace {

bool report(std::ostream& out, const std::string& name, bool ok) {
    out << (ok ? "PASS  " : "FAIL  ") << name << "\n";
    return ok;
}

std::vector<std::pair<int, int>> arcs1(std::initializer_list<std::pair<int, int>> arcs) {
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : arcs) out.emplace_back(u - 1, v - 1);
    return out;
}

}  // namespace

bool run_golden_suite(std::ostream& out) {
    bool all = true;

    {  // Five-element poset: partition, chains, antichain.
        TransitiveClosure tc = p5();
        WorkTable t = WorkTable::for_poset(tc);
        initial_partition(t);
        all &= report(out, "poset5 initial partition chooses (1,2)",
                      t.chosen_cells() == std::vector<std::pair<int, int>>{{0, 1}});
        ff_optimize(t);
        all &= report(out, "poset5 optimized cells are (1,3) and (4,2)",
                      t.chosen_cells() == std::vector<std::pair<int, int>>{{0, 2}, {3, 1}});
        ChainPartition p = chains_from_cells(t);
        all &= report(out, "poset5 chains are {1,3} {4,2} {5}",
                      p.chains == std::vector<std::vector<int>>{{0, 2}, {3, 1}, {4}});
        AntichainSearch u = general_antichain(t);
        all &= report(out, "poset5 maximum antichain is {3,4,5}",
                      u.found && u.antichain == set1(5, {3, 4, 5}));
        all &= report(out, "poset5 no maximum antichain holds 1 or 2",
                      !antichain_for_vertex(t, 0).found && !antichain_for_vertex(t, 1).found);
    }

    {  // Ten-vertex instance: closure, antichains, saturation, solver.
        OrientedDag d = d10();
        TransitiveClosure tc = transitive_closure(d);
        all &= report(out, "ten-vertex fictitious cells are (2,8) and (3,10)",
                      tc.fictitious_cells() ==
                          std::vector<std::pair<int, int>>{{1, 7}, {2, 9}});
        WorkTable t = WorkTable::for_digraph(tc);
        initial_partition(t);
        ff_optimize(t);
        AntichainSearch u = general_antichain(t);
        all &= report(out, "ten-vertex maximum antichain is {5,7,8,10}",
                      u.found && u.antichain == set1(10, {5, 7, 8, 10}));
        auto expect = [&](int v, std::initializer_list<int> want) {
            AntichainSearch r = antichain_for_vertex(t, v - 1);
            return r.found && r.antichain == set1(10, want);
        };
        all &= report(out, "ten-vertex per-vertex antichains match",
                      expect(1, {1, 3, 4, 6}) && expect(2, {1, 2, 3, 4}) &&
                          expect(3, {3, 4, 5, 8}) && expect(4, {4, 5, 8, 9}) &&
                          expect(6, {3, 4, 5, 6}));

        SaturateResult sat = saturate(d);
        OrientedDag want = d10_saturated();
        all &= report(out, "ten-vertex saturation reorients the upper layers",
                      sat.dag == want && sat.dag.layers() == want.layers());

        MmisResult res = solve_mmis(g10());
        AlphaResult alpha = brute_force_alpha(g10());
        all &= report(out, "ten-vertex solver finds an optimum independent set",
                      res.status == SolveStatus::completed && res.claimed_mmis.count() == 4 &&
                          alpha.size == 4 &&
                          verify_result(g10(), res, alpha.size) == Verdict::confirmed);
    }

    {  // Six-vertex instance: marked vertices and the clique certificate.
        OrientedDag d = fig_six_dag();
        TransitiveClosure tc = transitive_closure(d);
        ChainPartition marked = fig_six_partition_marked(tc);
        ChainPartition clean = fig_six_partition_clean(tc);
        all &= report(out, "six-vertex marked vertices are {5,6} and {}",
                      marked_vertices(marked, tc) == set1(6, {5, 6}) &&
                          marked_vertices(clean, tc).none());
        auto cert = lemma1_check(clean, tc, fig_six());
        all &= report(out, "six-vertex clean partition certifies an optimum of 2",
                      cert.has_value() && cert->mmis.count() == 2 &&
                          cert->cliques.size() == 2 &&
                          brute_force_alpha(fig_six()).size == 2 &&
                          is_mis(fig_six(), cert->mmis));
        all &= report(out, "six-vertex marked partition yields no certificate",
                      !lemma1_check(marked, tc, fig_six()).has_value());
    }

    {  // Arc-level golden values for the saturated ten-vertex digraph.
        OrientedDag want = d10_saturated();
        auto expected = arcs1({{1, 5}, {1, 8}, {2, 5}, {2, 6}, {2, 9}, {2, 10}, {3, 7},
                               {3, 9}, {4, 7}, {4, 10}, {6, 9}, {8, 6}, {10, 6}, {10, 9}});
        std::sort(expected.begin(), expected.end());
        all &= report(out, "saturated ten-vertex arc list matches", want.arcs() == expected);
        TransitiveClosure tc = transitive_closure(want);
        // (8,9) rides the two-arc path through 6 and its endpoints are
        // non-adjacent, so it is fictitious as well.
        all &= report(out, "saturated ten-vertex fictitious cells match",
                      tc.fictitious_cells() == std::vector<std::pair<int, int>>{
                                                   {0, 5}, {0, 8}, {3, 5}, {3, 8}, {7, 8}});
    }

    return all;
}

}  // namespace mislab::fixtures
