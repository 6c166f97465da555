#include "mislab/dag.hpp"

#include <algorithm>
#include <sstream>

namespace mislab {

std::vector<Bitset> initial_layering_within(const UndirectedGraph& g, const Bitset& active) {
    std::vector<Bitset> layers;
    Bitset rest = active;
    while (rest.any()) {
        Bitset layer = greedy_complete_to_mis_within(g, Bitset(g.vertex_count()), rest);
        layers.push_back(layer);
        rest.andnot_assign(layer);
    }
    return layers;
}

std::vector<Bitset> initial_layering(const UndirectedGraph& g) {
    return initial_layering_within(g, Bitset::full(g.vertex_count()));
}

OrientedDag OrientedDag::from_layering(std::shared_ptr<const UndirectedGraph> g,
                                       const std::vector<Bitset>& layers, const Bitset& active) {
    const int n = g->vertex_count();
    std::vector<int> layer_of(n, -1);
    for (size_t k = 0; k < layers.size(); ++k) {
        require(is_independent(*g, layers[k]), "layer is not an independent set");
        for (int v = layers[k].first(); v != -1; v = layers[k].next(v)) {
            require(active.test(v) && layer_of[v] == -1, "layers must partition the vertex set");
            layer_of[v] = int(k);
        }
    }
    for (int v = active.first(); v != -1; v = active.next(v))
        require(layer_of[v] != -1, "layers must cover the vertex set");

    OrientedDag d;
    d.g_ = std::move(g);
    d.verts_ = active;
    d.out_.assign(n, Bitset(n));
    d.in_.assign(n, Bitset(n));
    for (int u = active.first(); u != -1; u = active.next(u)) {
        Bitset nb = d.g_->neighbors(u) & active;
        for (int v = nb.next(u); v != -1; v = nb.next(v)) {
            ensure(layer_of[u] != layer_of[v], "independent layers cannot share an edge");
            int a = layer_of[u] < layer_of[v] ? u : v;
            int b = a == u ? v : u;
            d.out_[a].set(b);
            d.in_[b].set(a);
        }
    }
    d.recompute_ranks();
    return d;
}

OrientedDag OrientedDag::from_arcs(std::shared_ptr<const UndirectedGraph> g,
                                   const std::vector<std::pair<int, int>>& arcs,
                                   const Bitset& active) {
    const int n = g->vertex_count();
    OrientedDag d;
    d.g_ = std::move(g);
    d.verts_ = active;
    d.out_.assign(n, Bitset(n));
    d.in_.assign(n, Bitset(n));
    for (auto [u, v] : arcs) {
        require(active.test(u) && active.test(v), "arc endpoint outside the vertex set");
        require(d.g_->has_edge(u, v), "arc does not orient an edge of the base graph");
        require(!d.out_[u].test(v) && !d.out_[v].test(u), "edge oriented twice");
        d.out_[u].set(v);
        d.in_[v].set(u);
    }
    int want = 0;
    for (int u = active.first(); u != -1; u = active.next(u))
        want += (d.g_->neighbors(u) & active).count();
    require(int(arcs.size()) * 2 == want, "every edge inside the vertex set must be oriented");
    d.recompute_ranks();
    return d;
}

void OrientedDag::recompute_ranks() {
    const int n = g_->vertex_count();
    rank_.assign(n, -1);
    topo_.clear();
    std::vector<int> indeg(n, 0);
    std::vector<int> queue;
    for (int v = verts_.first(); v != -1; v = verts_.next(v)) {
        indeg[v] = in_[v].count();
        if (indeg[v] == 0) {
            rank_[v] = 0;
            queue.push_back(v);
        }
    }
    // Kahn order with longest-path ranks; queue order keeps this
    // deterministic but ranks do not depend on it.
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        topo_.push_back(u);
        for (int v = out_[u].first(); v != -1; v = out_[u].next(v)) {
            rank_[v] = std::max(rank_[v], rank_[u] + 1);
            if (--indeg[v] == 0) queue.push_back(v);
        }
    }
    ensure(int(topo_.size()) == verts_.count(), "orientation contains a cycle");

    int m = -1;
    for (int v : topo_) m = std::max(m, rank_[v]);
    layers_.assign(size_t(m + 1), Bitset(n));
    for (int v : topo_) layers_[rank_[v]].set(v);
    v0_ = m >= 0 ? layers_[0] : Bitset(n);
    ensure(is_independent(*g_, v0_), "initiating set must be independent");
}

std::vector<std::pair<int, int>> OrientedDag::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = verts_.first(); u != -1; u = verts_.next(u))
        for (int v = out_[u].first(); v != -1; v = out_[u].next(v)) out.emplace_back(u, v);
    return out;
}

int OrientedDag::arc_count() const {
    int c = 0;
    for (int u = verts_.first(); u != -1; u = verts_.next(u)) c += out_[u].count();
    return c;
}

OrientedDag orient_by_layering(const UndirectedGraph& g, const std::vector<Bitset>& layers) {
    auto shared = std::make_shared<const UndirectedGraph>(g);
    return OrientedDag::from_layering(shared, layers, Bitset::full(g.vertex_count()));
}

TransitiveClosure transitive_closure(const OrientedDag& d) {
    const int n = d.base().vertex_count();
    TransitiveClosure tc;
    tc.n = n;
    tc.verts = d.vertices();
    tc.reach.assign(n, Bitset(n));
    tc.essential.assign(n, Bitset(n));
    const auto& topo = d.topo_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int u = *it;
        tc.essential[u] = d.out(u);
        Bitset r = d.out(u);
        for (int v = d.out(u).first(); v != -1; v = d.out(u).next(v)) r |= tc.reach[v];
        tc.reach[u] = std::move(r);
    }
    return tc;
}

std::vector<std::pair<int, int>> TransitiveClosure::fictitious_cells() const {
    std::vector<std::pair<int, int>> cells;
    for (int i = verts.first(); i != -1; i = verts.next(i)) {
        Bitset f = reach[i];
        f.andnot_assign(essential[i]);
        for (int j = f.first(); j != -1; j = f.next(j)) cells.emplace_back(i, j);
    }
    return cells;
}

bool TransitiveClosure::is_antichain(const Bitset& s) const {
    for (int v = s.first(); v != -1; v = s.next(v))
        if (reach[v].intersects(s)) return false;
    return true;
}

Bitset TransitiveClosure::comparable_with(int v) const {
    Bitset c = reach[v];
    for (int u = verts.first(); u != -1; u = verts.next(u))
        if (reach[u].test(v)) c.set(u);
    return c;
}

OrientedDag cut(const OrientedDag& d, const Bitset& w) {
    require(w.is_subset_of(d.vertices()), "cut set must lie inside the digraph");
    require(is_independent(d.base(), w), "cut set must be independent");

    Bitset preds(d.base().vertex_count());
    for (int v = w.first(); v != -1; v = w.next(v)) preds |= d.in(v);

    OrientedDag r = d;
    for (int v = w.first(); v != -1; v = w.next(v)) {
        Bitset incoming = r.in_[v];
        for (int u = incoming.first(); u != -1; u = incoming.next(u)) {
            r.out_[u].reset(v);
            r.in_[v].reset(u);
            r.out_[v].set(u);
            r.in_[u].set(v);
        }
    }
    r.recompute_ranks();

    Bitset expected = d.initiating();
    expected.andnot_assign(preds);
    expected |= w;
    ensure(r.initiating() == expected, "cut initiating set differs from (V0 \\ pred(W)) | W");
    return r;
}

OrientedDag induced_subdag(const OrientedDag& d, const Bitset& keep) {
    require(keep.is_subset_of(d.vertices()), "induced vertex set must lie inside the digraph");
    OrientedDag r = d;
    r.verts_ = keep;
    for (int v = 0; v < d.base().vertex_count(); ++v) {
        if (!keep.test(v)) {
            r.out_[v].clear();
            r.in_[v].clear();
        } else {
            r.out_[v] &= keep;
            r.in_[v] &= keep;
        }
    }
    r.recompute_ranks();
    return r;
}

OrientedDag remove_closed_neighborhoods(const OrientedDag& d, const TransitiveClosure& tc,
                                        int i, int j) {
    require(tc.is_fictitious(i, j), "cell is not fictitious");
    Bitset gone = d.base().neighbors(i) | d.base().neighbors(j);
    gone.set(i);
    gone.set(j);
    Bitset keep = d.vertices();
    keep.andnot_assign(gone);
    OrientedDag r = induced_subdag(d, keep);

    // The surviving rank-0 set must contain every old initiating vertex
    // that kept all of its (absent) in-arcs, i.e. those not preceding
    // v_i or v_j.
    Bitset must = d.initiating();
    must.andnot_assign(d.in(i) | d.in(j));
    must &= keep;
    ensure(must.is_subset_of(r.initiating()),
           "initiating set lost a vertex that kept no in-arcs");
    return r;
}

std::string debug_dump(const OrientedDag& d) {
    std::ostringstream out;
    for (auto [u, v] : d.arcs()) out << (u + 1) << " > " << (v + 1) << "\n";
    for (int k = 0; k <= d.max_rank(); ++k) {
        out << "layer " << k << ": {";
        bool first = true;
        for (int v = d.layers()[k].first(); v != -1; v = d.layers()[k].next(v)) {
            if (!first) out << ", ";
            out << (v + 1);
            first = false;
        }
        out << "}\n";
    }
    return out.str();
}

}  // namespace mislab
