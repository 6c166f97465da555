#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mislab/dag.hpp"

namespace mislab {

namespace detail {
class TableEngine;
}

// A row or column margin mark: a star, or the index of the row/column the
// mark came from. Column marks hold row indices and row marks hold column
// indices, so traces can be read cell for cell.
struct CellMark {
    enum class Kind : unsigned char { none, star, from };
    Kind kind = Kind::none;
    int from = -1;

    bool marked() const { return kind != Kind::none; }
    bool operator==(const CellMark&) const = default;
};

struct MarkState {
    std::vector<CellMark> row, col;

    explicit MarkState(int n = 0) : row(n), col(n) {}
    bool operator==(const MarkState&) const = default;
};

// The working table of the chain-partition machinery. Element i appears
// once as a row (as a predecessor) and once as a column (as a successor);
// an admissible cell (i, j) says i comes strictly before j.
//
// Two masks reify the table's dual use: the matching that induces chains
// is built over `choosable` cells only, while mark propagation during
// antichain searches runs over all `admissible` cells. For a plain poset
// the two masks coincide; for a digraph's closure, choosable holds the
// essential cells and admissible the full reachability.
class WorkTable {
public:
    WorkTable(Bitset active, std::vector<Bitset> admissible, std::vector<Bitset> choosable);

    // choosable == admissible == reachability.
    static WorkTable for_poset(const TransitiveClosure& tc);
    // admissible = reachability, choosable = essential cells.
    static WorkTable for_digraph(const TransitiveClosure& tc);

    int size() const { return n_; }
    const Bitset& active() const { return active_; }

    bool is_admissible(int i, int j) const { return admissible_[i].test(j); }
    bool is_choosable(int i, int j) const { return choosable_[i].test(j); }
    const Bitset& admissible_row(int i) const { return admissible_[i]; }
    const Bitset& choosable_row(int i) const { return choosable_[i]; }
    bool choosable_equals_admissible() const { return choosable_ == admissible_; }

    int chosen_in_row(int r) const { return row_to_col_[r]; }
    int chosen_in_col(int c) const { return col_to_row_[c]; }
    int chosen_count() const;
    std::vector<std::pair<int, int>> chosen_cells() const;  // ascending rows

    // Marks an admissible cell as chosen; the row and column must be free.
    void choose(int r, int c);
    void clear_matching();

    // Deficit recovery: chains may from now on use any admissible cell.
    // Invalidates the matching optimality; run ff_optimize again.
    void widen_choosable();

    // Stable marks left by the latest completed marking cycle.
    const MarkState& stable_marks() const { return stable_marks_; }
    bool stable_marks_over_admissible() const { return stable_marks_admissible_; }

private:
    friend class detail::TableEngine;

    int n_ = 0;
    Bitset active_;
    std::vector<Bitset> admissible_, choosable_;
    std::vector<int> row_to_col_, col_to_row_;
    MarkState stable_marks_;
    bool stable_marks_valid_ = false;
    bool stable_marks_admissible_ = false;
};

// Scans rows in ascending order and chooses, per row, the first choosable
// cell whose column is still free.
void initial_partition(WorkTable& t);

// The marking algorithm: star chosen-free rows, propagate marks through
// unchosen choosable cells (rows to columns) and chosen cells (columns to
// rows), and augment along the recorded marks whenever a chosen-free
// column is reached. Terminates with a maximum matching over the
// choosable cells and the final marks left in place.
void ff_optimize(WorkTable& t);

struct AntichainSearch {
    enum class Status {
        ok,      // `antichain` is valid (may still be absent for a vertex search)
        deficit  // the matching is not maximum over the admissible cells;
                 // widen_choosable() + ff_optimize() and retry
    };
    Status status = Status::ok;
    bool found = false;
    Bitset antichain;
};

// Maximum antichain U_r \ U_c from marking over all admissible cells. It
// precedes every other maximum antichain.
AntichainSearch general_antichain(WorkTable& t);

// Re-runs the marking with row v additionally star-marked; the seeded row
// propagates through all of its admissible cells, chosen included. Returns
// the maximum antichain containing v when one exists; `found == false`
// when none does.
AntichainSearch antichain_for_vertex(WorkTable& t, int v);

struct ChainPartition {
    std::vector<std::vector<int>> chains;           // ascending start vertex
    std::vector<std::pair<int, int>> chosen_cells;  // the inducing matching
};

// Follows chosen cells as successor links; chain count equals
// active count - chosen count.
ChainPartition chains_from_cells(const WorkTable& t);

// Validates explicitly given chains (consecutive elements comparable,
// disjoint, covering) and packages them.
ChainPartition partition_from_chains(std::vector<std::vector<int>> chains,
                                     const TransitiveClosure& tc);

// Heads of fictitious cells whose both endpoints share a chain.
Bitset marked_vertices(const ChainPartition& p, const TransitiveClosure& tc);

// u1 precedes u2: every x in u1\u2 has some y in u2\u1 with x below y.
bool precedes(const Bitset& u1, const Bitset& u2, const TransitiveClosure& tc);

struct CliqueCertificate {
    Bitset mmis;                            // the maximum antichain
    std::vector<std::vector<int>> cliques;  // the chains, each a clique of g
};

// When no chain of the partition carries a fictitious pair, the maximum
// antichain is a maximum independent set of g and the chains form a
// minimum clique partition. Returns nothing otherwise.
std::optional<CliqueCertificate> lemma1_check(const ChainPartition& p,
                                              const TransitiveClosure& tc,
                                              const UndirectedGraph& g);

// Matrix dump with `1` (choosable), `f` (admissible only), `(1)` (chosen)
// and margin marks; diffable by eye against hand-worked tables.
std::string dump_table(const WorkTable& t);

}  // namespace mislab
