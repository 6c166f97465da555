#include "mislab/oracle.hpp"

#include <algorithm>

namespace mislab {

namespace {

struct BnB {
    const UndirectedGraph& g;
    int best = 0;
    Bitset best_set;

    void run(Bitset candidates, Bitset current, int current_size) {
        if (current_size + candidates.count() <= best) return;
        int pick = -1, pick_deg = -1;
        for (int v = candidates.first(); v != -1; v = candidates.next(v)) {
            int deg = (g.neighbors(v) & candidates).count();
            if (deg > pick_deg) {
                pick = v;
                pick_deg = deg;
            }
        }
        if (pick == -1) {
            if (current_size > best) {
                best = current_size;
                best_set = current;
            }
            return;
        }
        Bitset with = candidates;
        with.andnot_assign(g.neighbors(pick));
        with.reset(pick);
        current.set(pick);
        run(with, current, current_size + 1);
        current.reset(pick);
        candidates.reset(pick);
        run(candidates, current, current_size);
    }
};

}  // namespace

AlphaResult brute_force_alpha(const UndirectedGraph& g, int limit) {
    const int n = g.vertex_count();
    require(n <= limit, "graph too large for the exact oracle");
    BnB bnb{g};
    bnb.best_set = greedy_complete_to_mis(g, Bitset(n));
    bnb.best = bnb.best_set.count();
    bnb.run(Bitset::full(n), Bitset(n), 0);
    ensure(is_independent(g, bnb.best_set), "oracle witness must be independent");
    return {bnb.best, bnb.best_set};
}

AlphaResult alpha_exhaustive(const UndirectedGraph& g, int limit) {
    const int n = g.vertex_count();
    require(n <= limit, "graph too large for the exhaustive scan");
    std::vector<uint32_t> nbr(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = g.neighbors(u).first(); v != -1; v = g.neighbors(u).next(v))
            nbr[u] |= uint32_t(1) << v;
    int best = 0;
    uint32_t best_mask = 0;
    const uint64_t limit_mask = uint64_t(1) << n;
    for (uint64_t mask = 0; mask < limit_mask; ++mask) {
        uint32_t m = uint32_t(mask);
        bool ok = true;
        for (uint32_t rest = m; rest && ok;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            ok = (nbr[v] & m) == 0;
        }
        if (ok && std::popcount(m) > best) {
            best = std::popcount(m);
            best_mask = m;
        }
    }
    AlphaResult r{best, Bitset(n)};
    for (int v = 0; v < n; ++v)
        if (best_mask & (uint32_t(1) << v)) r.witness.set(v);
    return r;
}

namespace {

// Undirected comparability graph on the active vertices, compacted.
UndirectedGraph comparability_graph(const TransitiveClosure& tc, std::vector<int>& labels) {
    labels = tc.verts.to_vector();
    UndirectedGraph g(int(labels.size()));
    for (size_t a = 0; a < labels.size(); ++a)
        for (size_t b = a + 1; b < labels.size(); ++b)
            if (tc.reaches(labels[a], labels[b]) || tc.reaches(labels[b], labels[a]))
                g.add_edge(int(a), int(b));
    return g;
}

}  // namespace

int brute_force_max_antichain(const TransitiveClosure& tc, int limit) {
    require(tc.verts.count() <= limit, "poset too large for the exact oracle");
    std::vector<int> labels;
    UndirectedGraph comp = comparability_graph(tc, labels);
    return brute_force_alpha(comp, limit).size;
}

std::vector<Bitset> enumerate_max_antichains(const TransitiveClosure& tc, int limit) {
    const int count = tc.verts.count();
    require(count <= limit, "poset too large to enumerate");
    std::vector<int> labels = tc.verts.to_vector();
    std::vector<uint32_t> above(count, 0);
    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b)
            if (tc.reaches(labels[a], labels[b])) above[a] |= uint32_t(1) << b;

    int best = 0;
    std::vector<uint32_t> found;
    const uint64_t limit_mask = uint64_t(1) << count;
    for (uint64_t mask = 1; mask < limit_mask; ++mask) {
        uint32_t m = uint32_t(mask);
        bool anti = true;
        for (uint32_t rest = m; rest && anti;) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            anti = (above[a] & m) == 0;
        }
        if (!anti) continue;
        int size = std::popcount(m);
        if (size > best) {
            best = size;
            found.clear();
        }
        if (size == best) found.push_back(m);
    }
    std::vector<Bitset> out;
    for (uint32_t m : found) {
        Bitset s(tc.n);
        for (int a = 0; a < count; ++a)
            if (m & (uint32_t(1) << a)) s.set(labels[a]);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace mislab
