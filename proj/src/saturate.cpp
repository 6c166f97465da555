#include "mislab/saturate.hpp"

#include <algorithm>
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

std::vector<std::string> VsTrace::to_lines() const {
    std::vector<std::string> lines;
    for (const VsEvent& e : events) {
        std::ostringstream out;
        out << "layer " << e.layer << ": vertex " << (e.vertex + 1) << " antichain "
            << set_str(e.antichain) << (e.cut_applied ? " -> cut applied" : " accepted")
            << "; initiating size " << e.initiating_size;
        lines.push_back(out.str());
    }
    std::ostringstream tail;
    tail << "restarts " << restart_count << ", cuts " << cut_count << ", matching deficits "
         << deficit_events;
    lines.push_back(tail.str());
    return lines;
}

OrientedDag layer_subdigraph(const OrientedDag& d, int k) {
    require(k >= 0 && k <= d.max_rank(), "layer index out of range");
    Bitset keep(d.base().vertex_count());
    for (int r = k; r <= d.max_rank(); ++r) keep |= d.layers()[r];
    OrientedDag sub = induced_subdag(d, keep);
    ensure(sub.initiating() == d.layers()[k],
           "layer subgraph must be initiated by the layer itself");
    return sub;
}

namespace {

struct LayerCheck {
    bool saturated = true;
    int vertex = -1;
    Bitset witness;
    long deficits = 0;
};

// Steps 2-5 for one digraph: closure, chain partition over essential
// cells, then the per-vertex antichain tests in ascending vertex order
// within ascending layers. A matching deficit (the essential-only
// matching is not maximum over the closure) is repaired by widening the
// choosable mask and rebuilding the matching.
LayerCheck check_saturation(const OrientedDag& d, VsTrace* trace) {
    LayerCheck out;
    TransitiveClosure tc = transitive_closure(d);
    WorkTable t = WorkTable::for_digraph(tc);
    initial_partition(t);
    ff_optimize(t);

    auto recover = [&]() {
        t.widen_choosable();
        ff_optimize(t);
        ++out.deficits;
        if (trace) ++trace->deficit_events;
    };

    if (general_antichain(t).status == AntichainSearch::Status::deficit) recover();

    const int target = d.initiating().count();
    for (int k = 0; k <= d.max_rank(); ++k) {
        const Bitset& layer = d.layers()[k];
        for (int v = layer.first(); v != -1; v = layer.next(v)) {
            AntichainSearch r = antichain_for_vertex(t, v);
            if (r.status == AntichainSearch::Status::deficit) {
                recover();
                r = antichain_for_vertex(t, v);
                ensure(r.status == AntichainSearch::Status::ok,
                       "matching still deficient after widening");
            }
            if (!r.found) continue;
            bool ok = r.antichain.count() == target &&
                      is_mis_within(d.base(), r.antichain, d.vertices());
            if (!ok) {
                out.saturated = false;
                out.vertex = v;
                out.witness = std::move(r.antichain);
                return out;
            }
        }
    }
    return out;
}

// Replaces the arc structure among the subgraph's vertices; arcs touching
// the rest of the digraph are untouched. Arcs from a subgraph vertex can
// only lead inside the subgraph (ranks only grow along arcs), so merging
// arc lists is enough.
OrientedDag splice_subdag(const OrientedDag& whole, const OrientedDag& sub) {
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : whole.arcs())
        if (!(sub.vertices().test(u) && sub.vertices().test(v))) arcs.emplace_back(u, v);
    for (auto [u, v] : sub.arcs()) arcs.emplace_back(u, v);
    return OrientedDag::from_arcs(whole.base_ptr(), arcs, whole.vertices());
}

}  // namespace

SaturationCheck is_saturated(const OrientedDag& d) {
    LayerCheck c = check_saturation(d, nullptr);
    return {c.saturated, c.vertex, c.witness};
}

bool is_vertex_saturated(const OrientedDag& d) {
    for (int k = 0; k <= d.max_rank(); ++k)
        if (!is_saturated(layer_subdigraph(d, k)).saturated) return false;
    return true;
}

SaturateResult saturate(const OrientedDag& input, const VsCaps& caps) {
    OrientedDag d = input;
    const long n = d.vertex_count();
    const long cap = caps.max_cuts > 0 ? caps.max_cuts : std::max(16l, 10 * n * n);
    VsTrace trace;

    while (true) {
        bool any_cut_this_pass = false;
        for (int k = 0; k < d.max_rank(); ++k) {
            OrientedDag sub = layer_subdigraph(d, k);
            while (true) {
                LayerCheck check = check_saturation(sub, &trace);
                if (check.saturated) {
                    if (caps.record_checks)
                        trace.events.push_back(
                            {k, -1, sub.initiating(), false, sub.initiating().count()});
                    break;
                }
                Bitset w = greedy_complete_to_mis_within(d.base(), check.witness, sub.vertices());
                OrientedDag recut = cut(sub, w);
                ensure(recut.initiating().count() > sub.initiating().count(),
                       "a cut must strictly enlarge the layer's initiating set");
                trace.events.push_back({k, check.vertex, check.witness, true,
                                        recut.initiating().count()});
                d = splice_subdag(d, recut);
                any_cut_this_pass = true;
                if (++trace.cut_count > cap) throw SaturationCapExceeded(trace);
                if (k >= d.max_rank()) break;  // layer structure flattened below k
                sub = layer_subdigraph(d, k);
            }
            if (k >= d.max_rank()) break;
        }
        if (!any_cut_this_pass) break;
        ++trace.restart_count;
    }
    return {std::move(d), std::move(trace)};
}

namespace {

struct SplitMix64 {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

}  // namespace

std::optional<HallViolation> hall_check(const OrientedDag& d, const TransitiveClosure& tc,
                                        int exhaustive_limit, int samples,
                                        uint64_t sample_seed) {
    const int n = d.base().vertex_count();
    // Predecessor rows of the closure, restricted per layer below.
    std::vector<Bitset> pred(n, Bitset(n));
    for (int u = tc.verts.first(); u != -1; u = tc.verts.next(u))
        for (int v = tc.reach[u].first(); v != -1; v = tc.reach[u].next(v)) pred[v].set(u);

    for (int k = 0; k <= d.max_rank(); ++k) {
        Bitset yk(n);
        for (int r = k; r <= d.max_rank(); ++r) yk |= d.layers()[r];
        const Bitset& vk = d.layers()[k];
        Bitset pool = andnot(yk, vk);
        std::vector<int> verts = pool.to_vector();

        auto violates = [&](const Bitset& u) -> std::optional<HallViolation> {
            Bitset preds(n);
            for (int x = u.first(); x != -1; x = u.next(x)) preds |= pred[x];
            preds &= vk;
            if (preds.count() < u.count()) return HallViolation{k, u, preds.count()};
            return std::nullopt;
        };

        if (int(verts.size()) <= exhaustive_limit) {
            const uint32_t limit = uint32_t(1) << verts.size();
            for (uint32_t mask = 1; mask < limit; ++mask) {
                Bitset u(n);
                for (size_t i = 0; i < verts.size(); ++i)
                    if (mask & (uint32_t(1) << i)) u.set(verts[i]);
                // Restricting reachability to the subgraph is sound: paths
                // never descend below the layer.
                bool anti = true;
                for (int x = u.first(); anti && x != -1; x = u.next(x))
                    anti = !(tc.reach[x] & yk).intersects(u);
                if (!anti) continue;
                if (auto v = violates(u)) return v;
            }
        } else {
            SplitMix64 rng{sample_seed + uint64_t(k)};
            for (int s = 0; s < samples; ++s) {
                Bitset u(n);
                for (int x : verts) {
                    if (rng.next() & 1) continue;
                    if (!(tc.reach[x] & yk).intersects(u) && !u.intersects(pred[x] & yk)) u.set(x);
                }
                if (u.none()) continue;
                if (auto v = violates(u)) return v;
            }
        }
    }
    return std::nullopt;
}

bool essential_mcp_exists(const OrientedDag& d) {
    TransitiveClosure tc = transitive_closure(d);
    WorkTable t = WorkTable::for_digraph(tc);
    initial_partition(t);
    ff_optimize(t);

    // Closure width from an independent maximum matching over all
    // admissible cells.
    const int n = d.base().vertex_count();
    std::vector<int> col_to_row(n, -1);
    std::vector<char> seen(n, 0);
    auto kuhn = [&](auto&& self, int r) -> bool {
        for (int c = tc.reach[r].first(); c != -1; c = tc.reach[r].next(c)) {
            if (seen[c]) continue;
            seen[c] = 1;
            if (col_to_row[c] == -1 || self(self, col_to_row[c])) {
                col_to_row[c] = r;
                return true;
            }
        }
        return false;
    };
    int closure_matching = 0;
    for (int r = tc.verts.first(); r != -1; r = tc.verts.next(r)) {
        std::fill(seen.begin(), seen.end(), 0);
        if (kuhn(kuhn, r)) ++closure_matching;
    }
    const int width = d.vertex_count() - closure_matching;

    ChainPartition p = chains_from_cells(t);
    if (int(p.chains.size()) != width) return false;
    for (const auto& chain : p.chains)
        if (!d.initiating().test(chain.front())) return false;
    return true;
}

}  // namespace mislab
