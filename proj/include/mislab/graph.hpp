#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mislab/bitset.hpp"

namespace mislab {

// A set of vertices of a graph; capacity equals the graph's vertex count.
using VertexSet = Bitset;

// Simple loop-free undirected graph stored as bit-packed adjacency rows.
// Vertices are 0-based internally; file formats and printed output are
// 1-based.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(int n) : n_(n), adj_(n, Bitset(n)) {}

    // Duplicate edges collapse. Rejects loops and out-of-range endpoints.
    static UndirectedGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    void add_edge(int u, int v);
    const Bitset& neighbors(int v) const { return adj_[v]; }

    UndirectedGraph complement() const;

    // FNV-1a over the vertex count and adjacency words; used to make
    // experiment records tamper-evident.
    uint64_t adjacency_hash() const;
    std::string adjacency_hash_hex() const;

    bool operator==(const UndirectedGraph& o) const = default;

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
    int m_ = 0;
};

bool is_independent(const UndirectedGraph& g, const VertexSet& s);

// Independent and dominating: no vertex of `within` can be added.
bool is_mis_within(const UndirectedGraph& g, const VertexSet& s, const VertexSet& within);
bool is_mis(const UndirectedGraph& g, const VertexSet& s);

// Extends an independent set to a maximal one by scanning `within` in
// ascending vertex order. Deterministic; rejects a dependent seed.
VertexSet greedy_complete_to_mis_within(const UndirectedGraph& g, const VertexSet& s,
                                        const VertexSet& within);
VertexSet greedy_complete_to_mis(const UndirectedGraph& g, const VertexSet& s);

// G(n,p) with a fixed in-house generator so identical (n, p, seed) gives
// bit-identical graphs on every platform.
UndirectedGraph random_gnp(int n, double p, uint64_t seed);

// --- file formats ------------------------------------------------------

// DIMACS: `c ...` comments, `p edge <n> <m>`, `e <u> <v>` (1-based).
UndirectedGraph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const UndirectedGraph& g,
                  const std::string& comment = "");

// Plain edge list: first line `<n> <m>`, then `<u> <v>` per line (1-based).
UndirectedGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const UndirectedGraph& g);

// Sniffs the format: a leading `c` or `p` line means DIMACS.
UndirectedGraph read_graph(std::istream& in);
UndirectedGraph read_graph_file(const std::string& path);

}  // namespace mislab
