#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mislab/graph.hpp"

namespace mislab {

// An acyclic orientation of (an induced subgraph of) an undirected graph,
// together with the derived structure the algorithms work on:
//  - rank(v): the longest directed path length from a source to v,
//  - layers: vertices grouped by rank,
//  - the initiating set: the rank-0 layer.
// Ranks and layers are recomputed eagerly after every mutation; they are
// never stored stale. Each instance is exclusively owned by one solver
// run; the base graph is shared read-only.
class OrientedDag {
public:
    OrientedDag() = default;

    // Orients every edge inside `active` from its lower layer to its
    // higher layer. Layers must partition `active` and each must be
    // independent.
    static OrientedDag from_layering(std::shared_ptr<const UndirectedGraph> g,
                                     const std::vector<Bitset>& layers, const Bitset& active);

    // Builds from an explicit arc list; every arc must orient an edge of
    // the base graph and every edge inside `active` must appear exactly
    // once. Throws if the orientation is cyclic.
    static OrientedDag from_arcs(std::shared_ptr<const UndirectedGraph> g,
                                 const std::vector<std::pair<int, int>>& arcs,
                                 const Bitset& active);

    const UndirectedGraph& base() const { return *g_; }
    const std::shared_ptr<const UndirectedGraph>& base_ptr() const { return g_; }

    const Bitset& vertices() const { return verts_; }
    int vertex_count() const { return verts_.count(); }

    bool has_arc(int u, int v) const { return out_[u].test(v); }
    const Bitset& out(int u) const { return out_[u]; }
    const Bitset& in(int v) const { return in_[v]; }
    std::vector<std::pair<int, int>> arcs() const;
    int arc_count() const;

    int rank_of(int v) const { return rank_[v]; }  // -1 when inactive
    int max_rank() const { return int(layers_.size()) - 1; }
    const std::vector<Bitset>& layers() const { return layers_; }
    const Bitset& initiating() const { return v0_; }
    const std::vector<int>& topo_order() const { return topo_; }

    bool operator==(const OrientedDag& o) const {
        return verts_ == o.verts_ && out_ == o.out_ && *g_ == *o.g_;
    }

private:
    friend OrientedDag cut(const OrientedDag&, const Bitset&);
    friend OrientedDag induced_subdag(const OrientedDag&, const Bitset&);

    void recompute_ranks();  // throws on a cycle

    std::shared_ptr<const UndirectedGraph> g_;
    Bitset verts_;
    std::vector<Bitset> out_, in_;
    std::vector<int> rank_;
    std::vector<Bitset> layers_;
    Bitset v0_;
    std::vector<int> topo_;  // active vertices in topological order
};

// Peels ascending-order greedy maximal independent sets off the graph
// until it is exhausted; the resulting sets are the initial layers.
std::vector<Bitset> initial_layering_within(const UndirectedGraph& g, const Bitset& active);
std::vector<Bitset> initial_layering(const UndirectedGraph& g);

OrientedDag orient_by_layering(const UndirectedGraph& g, const std::vector<Bitset>& layers);

// Strict-order reachability over an OrientedDag. An `essential` cell is an
// arc of the digraph itself; a reachable non-essential cell is fictitious,
// and its endpoints are always non-adjacent in the base graph.
struct TransitiveClosure {
    int n = 0;
    Bitset verts;
    std::vector<Bitset> reach;      // row i: vertices strictly after i
    std::vector<Bitset> essential;  // subset of reach

    bool reaches(int i, int j) const { return reach[i].test(j); }
    bool is_essential(int i, int j) const { return essential[i].test(j); }
    bool is_fictitious(int i, int j) const { return reach[i].test(j) && !essential[i].test(j); }

    // Ascending (i, j) order.
    std::vector<std::pair<int, int>> fictitious_cells() const;

    bool is_antichain(const Bitset& s) const;
    // Vertices comparable with v (either direction).
    Bitset comparable_with(int v) const;
};

TransitiveClosure transitive_closure(const OrientedDag& d);

// The cutting operation: reverses every arc whose head lies in the
// independent set w. The result stays acyclic, the underlying undirected
// graph is untouched, and the new initiating set is
// (V0 \ pred(w)) | w, which is asserted.
OrientedDag cut(const OrientedDag& d, const Bitset& w);

// Induced sub-digraph on `keep` (original vertex labels preserved).
OrientedDag induced_subdag(const OrientedDag& d, const Bitset& keep);

// Drops v_i, v_j and every vertex adjacent to either, for a fictitious
// pair (i, j); returns the induced sub-digraph on the remainder.
OrientedDag remove_closed_neighborhoods(const OrientedDag& d, const TransitiveClosure& tc,
                                        int i, int j);

// Arc list (`u > v` per line, 1-based) followed by `layer k: {...}` lines.
std::string debug_dump(const OrientedDag& d);

}  // namespace mislab
