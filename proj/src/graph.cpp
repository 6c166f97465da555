#include "mislab/graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mislab {

UndirectedGraph UndirectedGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    require(n >= 0, "vertex count must be non-negative");
    UndirectedGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void UndirectedGraph::add_edge(int u, int v) {
    require(u >= 0 && u < n_ && v >= 0 && v < n_, "edge endpoint out of range");
    require(u != v, "loop edges are not allowed");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

UndirectedGraph UndirectedGraph::complement() const {
    UndirectedGraph c(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adj_[u].test(v)) c.add_edge(u, v);
    return c;
}

uint64_t UndirectedGraph::adjacency_hash() const {
    uint64_t h = 14695981039346656037ull;
    auto mix = [&h](uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(uint64_t(n_));
    for (const Bitset& row : adj_)
        for (size_t k = 0; k < row.word_count(); ++k) mix(row.word(k));
    return h;
}

std::string UndirectedGraph::adjacency_hash_hex() const {
    static const char* digits = "0123456789abcdef";
    uint64_t h = adjacency_hash();
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) s[i] = digits[h & 0xf];
    return s;
}

bool is_independent(const UndirectedGraph& g, const VertexSet& s) {
    for (int v = s.first(); v != -1; v = s.next(v))
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

bool is_mis_within(const UndirectedGraph& g, const VertexSet& s, const VertexSet& within) {
    if (!is_independent(g, s)) return false;
    Bitset dominated = s;
    for (int v = s.first(); v != -1; v = s.next(v)) dominated |= g.neighbors(v);
    dominated &= within;
    Bitset rest = within;
    rest.andnot_assign(dominated);
    return rest.none();
}

bool is_mis(const UndirectedGraph& g, const VertexSet& s) {
    return is_mis_within(g, s, Bitset::full(g.vertex_count()));
}

VertexSet greedy_complete_to_mis_within(const UndirectedGraph& g, const VertexSet& s,
                                        const VertexSet& within) {
    require(s.is_subset_of(within), "seed set must lie inside the target vertex set");
    require(is_independent(g, s), "seed set must be independent");
    VertexSet out = s;
    for (int v = within.first(); v != -1; v = within.next(v))
        if (!out.test(v) && !g.neighbors(v).intersects(out)) out.set(v);
    return out;
}

VertexSet greedy_complete_to_mis(const UndirectedGraph& g, const VertexSet& s) {
    return greedy_complete_to_mis_within(g, s, Bitset::full(g.vertex_count()));
}

namespace {

// SplitMix64; fixed here so generated instances never depend on the
// standard library's distribution implementations.
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

UndirectedGraph random_gnp(int n, double p, uint64_t seed) {
    require(n >= 0, "vertex count must be non-negative");
    require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
    UndirectedGraph g(n);
    if (p <= 0.0) return g;
    SplitMix64 rng{seed};
    const double two53 = 9007199254740992.0;  // 2^53
    const uint64_t threshold = p >= 1.0 ? uint64_t(1) << 53 : uint64_t(p * two53);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((rng.next() >> 11) < threshold) g.add_edge(u, v);
    return g;
}

// --- file formats ------------------------------------------------------

UndirectedGraph read_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long m_declared = -1;
    UndirectedGraph g;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            std::string kind;
            ls >> kind >> n >> m_declared;
            require(bool(ls) && kind == "edge" && n >= 0, "malformed DIMACS problem line");
            g = UndirectedGraph(n);
        } else if (tag == 'e') {
            require(n >= 0, "DIMACS edge line before problem line");
            int u = 0, v = 0;
            ls >> u >> v;
            require(bool(ls), "malformed DIMACS edge line");
            g.add_edge(u - 1, v - 1);
        } else {
            throw std::invalid_argument("unknown DIMACS line tag: " + line);
        }
    }
    require(n >= 0, "DIMACS input has no problem line");
    return g;
}

void write_dimacs(std::ostream& out, const UndirectedGraph& g, const std::string& comment) {
    if (!comment.empty()) out << "c " << comment << "\n";
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = g.neighbors(u).next(u); v != -1; v = g.neighbors(u).next(v))
            out << "e " << (u + 1) << " " << (v + 1) << "\n";
}

UndirectedGraph read_edge_list(std::istream& in) {
    int n = 0;
    long m = 0;
    require(bool(in >> n >> m), "edge list must start with `<n> <m>`");
    UndirectedGraph g(n);
    for (long i = 0; i < m; ++i) {
        int u = 0, v = 0;
        require(bool(in >> u >> v), "edge list ended early");
        g.add_edge(u - 1, v - 1);
    }
    return g;
}

void write_edge_list(std::ostream& out, const UndirectedGraph& g) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = g.neighbors(u).next(u); v != -1; v = g.neighbors(u).next(v))
            out << (u + 1) << " " << (v + 1) << "\n";
}

UndirectedGraph read_graph(std::istream& in) {
    // Peek at the first meaningful character to pick the format.
    std::streampos start = in.tellg();
    char c = 0;
    while (in.get(c) && (c == ' ' || c == '\n' || c == '\t' || c == '\r')) {
    }
    in.clear();
    in.seekg(start);
    if (c == 'c' || c == 'p') return read_dimacs(in);
    return read_edge_list(in);
}

UndirectedGraph read_graph_file(const std::string& path) {
    std::ifstream f(path);
    require(bool(f), "cannot open graph file: " + path);
    return read_graph(f);
}

}  // namespace mislab
