#include "mislab/chains.hpp"

#include <algorithm>
#include <sstream>

namespace mislab {

WorkTable::WorkTable(Bitset active, std::vector<Bitset> admissible, std::vector<Bitset> choosable)
    : n_(active.capacity()),
      active_(std::move(active)),
      admissible_(std::move(admissible)),
      choosable_(std::move(choosable)),
      row_to_col_(n_, -1),
      col_to_row_(n_, -1),
      stable_marks_(n_) {
    require(int(admissible_.size()) == n_ && int(choosable_.size()) == n_,
            "mask row count must equal the table size");
    for (int i = 0; i < n_; ++i) {
        require(choosable_[i].is_subset_of(admissible_[i]), "choosable cells must be admissible");
        require(!admissible_[i].test(i), "diagonal cells are never admissible");
        if (!active_.test(i)) require(admissible_[i].none(), "inactive rows must be empty");
        require((admissible_[i] & active_) == admissible_[i], "cells must stay inside the active set");
    }
}

WorkTable WorkTable::for_poset(const TransitiveClosure& tc) {
    return WorkTable(tc.verts, tc.reach, tc.reach);
}

WorkTable WorkTable::for_digraph(const TransitiveClosure& tc) {
    return WorkTable(tc.verts, tc.reach, tc.essential);
}

int WorkTable::chosen_count() const {
    int c = 0;
    for (int r = 0; r < n_; ++r)
        if (row_to_col_[r] != -1) ++c;
    return c;
}

std::vector<std::pair<int, int>> WorkTable::chosen_cells() const {
    std::vector<std::pair<int, int>> cells;
    for (int r = active_.first(); r != -1; r = active_.next(r))
        if (row_to_col_[r] != -1) cells.emplace_back(r, row_to_col_[r]);
    return cells;
}

void WorkTable::choose(int r, int c) {
    require(is_admissible(r, c), "cannot choose a non-admissible cell");
    require(row_to_col_[r] == -1 && col_to_row_[c] == -1,
            "chosen cells must sit in distinct rows and columns");
    row_to_col_[r] = c;
    col_to_row_[c] = r;
    stable_marks_valid_ = false;
}

void WorkTable::clear_matching() {
    std::fill(row_to_col_.begin(), row_to_col_.end(), -1);
    std::fill(col_to_row_.begin(), col_to_row_.end(), -1);
    stable_marks_valid_ = false;
}

void WorkTable::widen_choosable() {
    choosable_ = admissible_;
    stable_marks_valid_ = false;
}

namespace detail {

class TableEngine {
public:
    explicit TableEngine(WorkTable& t) : t_(t) {}

    struct Propagation {
        bool escaped = false;
        int escape_col = -1;
    };

    // One cycle of mark appointment, processed in rounds: newly marked
    // rows (ascending) mark the columns of their propagating cells, then
    // newly marked columns (ascending) either mark the row of their
    // chosen cell or, when chosen-free, stop the cycle.
    //
    // A row propagates its unchosen cells only; the seeded row, when set,
    // propagates every admissible cell including its chosen one.
    Propagation propagate(MarkState& m, std::vector<int> pending_rows, int seed_row,
                          bool over_admissible) const {
        std::vector<int> pending_cols;
        while (!pending_rows.empty()) {
            std::sort(pending_rows.begin(), pending_rows.end());
            pending_cols.clear();
            for (int r : pending_rows) {
                const Bitset& cells =
                    over_admissible ? t_.admissible_row(r) : t_.choosable_row(r);
                for (int c = cells.first(); c != -1; c = cells.next(c)) {
                    if (r != seed_row && t_.chosen_in_row(r) == c) continue;
                    if (!m.col[c].marked()) {
                        m.col[c] = {CellMark::Kind::from, r};
                        pending_cols.push_back(c);
                    }
                }
            }
            pending_rows.clear();
            std::sort(pending_cols.begin(), pending_cols.end());
            for (int c : pending_cols) {
                int r = t_.chosen_in_col(c);
                if (r == -1) return {true, c};
                if (!m.row[r].marked()) {
                    m.row[r] = {CellMark::Kind::from, c};
                    pending_rows.push_back(r);
                }
            }
        }
        return {};
    }

    std::vector<int> star_free_rows(MarkState& m) const {
        std::vector<int> rows;
        for (int r = t_.active().first(); r != -1; r = t_.active().next(r))
            if (t_.chosen_in_row(r) == -1) {
                m.row[r] = {CellMark::Kind::star, -1};
                rows.push_back(r);
            }
        return rows;
    }

    // Rebuilds the chosen collection along the recorded marks, gaining
    // one cell: the column that escaped takes the cell of the row that
    // marked it, that row drops its old cell onto the next column, and so
    // on back to a star-marked row.
    void augment(const MarkState& m, int escape_col) {
        int c = escape_col;
        while (true) {
            ensure(m.col[c].kind == CellMark::Kind::from, "augmenting through an unmarked column");
            int r = m.col[c].from;
            int old_c = t_.row_to_col_[r];
            t_.row_to_col_[r] = c;
            t_.col_to_row_[c] = r;
            if (old_c == -1) break;  // star-marked row: the collection grew by one
            t_.col_to_row_[old_c] = -1;
            c = old_c;
        }
        t_.stable_marks_valid_ = false;
    }

    void optimize() {
        while (true) {
            MarkState m(t_.n_);
            auto p = propagate(m, star_free_rows(m), -1, /*over_admissible=*/false);
            if (!p.escaped) {
                t_.stable_marks_ = std::move(m);
                t_.stable_marks_valid_ = true;
                t_.stable_marks_admissible_ = t_.choosable_equals_admissible();
                return;
            }
            augment(m, p.escape_col);
        }
    }

    // Marks over the admissible mask; these are the marks antichain
    // searches start from. Fails with `deficit` when the matching, built
    // over choosable cells only, is not maximum over the admissible ones.
    bool ensure_admissible_marks() {
        if (t_.stable_marks_valid_ && t_.stable_marks_admissible_) return true;
        MarkState m(t_.n_);
        auto p = propagate(m, star_free_rows(m), -1, /*over_admissible=*/true);
        if (p.escaped) return false;  // genuine augmenting path over admissible cells
        t_.stable_marks_ = std::move(m);
        t_.stable_marks_valid_ = true;
        t_.stable_marks_admissible_ = true;
        return true;
    }

    Bitset rows_minus_cols(const MarkState& m) const {
        Bitset u(t_.n_);
        for (int v = t_.active().first(); v != -1; v = t_.active().next(v))
            if (m.row[v].marked() && !m.col[v].marked()) u.set(v);
        return u;
    }

    // Independent check used to tell a genuine matching deficit from a
    // seed-induced escape: tries to grow the matching over admissible
    // cells on a scratch copy.
    bool admissible_matching_can_grow() const {
        std::vector<int> row_to_col = t_.row_to_col_, col_to_row = t_.col_to_row_;
        std::vector<char> seen(t_.n_, 0);
        auto try_augment = [&](auto&& self, int r) -> bool {
            const Bitset& cells = t_.admissible_row(r);
            for (int c = cells.first(); c != -1; c = cells.next(c)) {
                if (seen[c]) continue;
                seen[c] = 1;
                if (col_to_row[c] == -1 || self(self, col_to_row[c])) {
                    col_to_row[c] = r;
                    row_to_col[r] = c;
                    return true;
                }
            }
            return false;
        };
        for (int r = t_.active().first(); r != -1; r = t_.active().next(r)) {
            if (row_to_col[r] != -1) continue;
            std::fill(seen.begin(), seen.end(), 0);
            if (try_augment(try_augment, r)) return true;
        }
        return false;
    }

private:
    WorkTable& t_;
};

}  // namespace detail

void initial_partition(WorkTable& t) {
    require(t.chosen_count() == 0, "initial partition expects an empty chosen set");
    for (int r = t.active().first(); r != -1; r = t.active().next(r)) {
        const Bitset& cells = t.choosable_row(r);
        for (int c = cells.first(); c != -1; c = cells.next(c)) {
            if (t.chosen_in_col(c) == -1) {
                t.choose(r, c);
                break;
            }
        }
    }
}

void ff_optimize(WorkTable& t) {
    detail::TableEngine(t).optimize();
}

AntichainSearch general_antichain(WorkTable& t) {
    detail::TableEngine eng(t);
    if (!eng.ensure_admissible_marks()) return {AntichainSearch::Status::deficit, false, {}};
    return {AntichainSearch::Status::ok, true, eng.rows_minus_cols(t.stable_marks())};
}

AntichainSearch antichain_for_vertex(WorkTable& t, int v) {
    require(t.active().test(v), "vertex outside the table");
    detail::TableEngine eng(t);
    if (!eng.ensure_admissible_marks()) return {AntichainSearch::Status::deficit, false, {}};

    MarkState m = t.stable_marks();
    if (!m.row[v].marked()) m.row[v] = {CellMark::Kind::star, -1};
    auto p = eng.propagate(m, {v}, v, /*over_admissible=*/true);
    if (p.escaped) {
        // Reaching a chosen-free column from the seeded star is only an
        // augmenting path when it can be traced to a genuinely free row.
        if (eng.admissible_matching_can_grow())
            return {AntichainSearch::Status::deficit, false, {}};
        return {AntichainSearch::Status::ok, false, {}};
    }
    Bitset u = eng.rows_minus_cols(m);
    if (!u.test(v)) return {AntichainSearch::Status::ok, false, {}};
    return {AntichainSearch::Status::ok, true, std::move(u)};
}

ChainPartition chains_from_cells(const WorkTable& t) {
    ChainPartition p;
    p.chosen_cells = t.chosen_cells();
    int covered = 0;
    for (int s = t.active().first(); s != -1; s = t.active().next(s)) {
        if (t.chosen_in_col(s) != -1) continue;  // not a chain start
        std::vector<int> chain;
        for (int v = s; v != -1; v = t.chosen_in_row(v)) {
            chain.push_back(v);
            ensure(int(chain.size()) <= t.active().count(), "chosen cells form a cycle");
        }
        covered += int(chain.size());
        p.chains.push_back(std::move(chain));
    }
    ensure(covered == t.active().count(), "chosen cells form a cycle");
    ensure(int(p.chains.size()) == t.active().count() - int(p.chosen_cells.size()),
           "chain count must be active count minus chosen count");
    return p;
}

ChainPartition partition_from_chains(std::vector<std::vector<int>> chains,
                                     const TransitiveClosure& tc) {
    ChainPartition p;
    Bitset seen(tc.n);
    for (auto& chain : chains) {
        require(!chain.empty(), "chains must be non-empty");
        for (size_t i = 0; i < chain.size(); ++i) {
            int v = chain[i];
            require(tc.verts.test(v) && !seen.test(v), "chains must partition the vertex set");
            seen.set(v);
            if (i + 1 < chain.size()) {
                require(tc.reaches(v, chain[i + 1]),
                        "consecutive chain elements must be comparable");
                p.chosen_cells.emplace_back(v, chain[i + 1]);
            }
        }
    }
    require(seen == tc.verts, "chains must cover the vertex set");
    std::sort(p.chosen_cells.begin(), p.chosen_cells.end());
    p.chains = std::move(chains);
    return p;
}

Bitset marked_vertices(const ChainPartition& p, const TransitiveClosure& tc) {
    Bitset b(tc.n);
    for (const auto& chain : p.chains)
        for (size_t i = 0; i < chain.size(); ++i)
            for (size_t j = i + 1; j < chain.size(); ++j)
                if (tc.is_fictitious(chain[i], chain[j])) b.set(chain[j]);
    return b;
}

bool precedes(const Bitset& u1, const Bitset& u2, const TransitiveClosure& tc) {
    Bitset only1 = andnot(u1, u2);
    Bitset only2 = andnot(u2, u1);
    for (int x = only1.first(); x != -1; x = only1.next(x))
        if (!tc.reach[x].intersects(only2)) return false;
    return true;
}

std::optional<CliqueCertificate> lemma1_check(const ChainPartition& p, const TransitiveClosure& tc,
                                              const UndirectedGraph& g) {
    if (marked_vertices(p, tc).any()) return std::nullopt;

    // Rebuild the table with the partition's cells chosen and extract the
    // maximum antichain its marks define.
    WorkTable t = WorkTable::for_poset(tc);
    for (auto [r, c] : p.chosen_cells) t.choose(r, c);
    AntichainSearch res = general_antichain(t);
    require(res.status == AntichainSearch::Status::ok, "partition is not a minimum chain partition");
    ensure(int(p.chains.size()) == res.antichain.count(),
           "chain count must equal the maximum antichain size");

    CliqueCertificate cert;
    cert.mmis = res.antichain;
    for (const auto& chain : p.chains) {
        for (size_t i = 0; i < chain.size(); ++i)
            for (size_t j = i + 1; j < chain.size(); ++j)
                ensure(g.has_edge(chain[i], chain[j]),
                       "chain without marked vertices must induce a clique");
        cert.cliques.push_back(chain);
    }
    return cert;
}

std::string dump_table(const WorkTable& t) {
    std::ostringstream out;
    auto label = [](int v) { return "v" + std::to_string(v + 1); };
    const Bitset& act = t.active();
    out << "      ";
    for (int c = act.first(); c != -1; c = act.next(c)) {
        std::string h = label(c);
        out << h << std::string(5 - h.size(), ' ');
    }
    out << "\n";
    const MarkState& m = t.stable_marks();
    auto mark_str = [&label](const CellMark& cm) -> std::string {
        if (cm.kind == CellMark::Kind::star) return "*";
        if (cm.kind == CellMark::Kind::from) return label(cm.from);
        return "";
    };
    for (int r = act.first(); r != -1; r = act.next(r)) {
        std::string h = label(r);
        out << h << std::string(5 - h.size(), ' ') << " ";
        for (int c = act.first(); c != -1; c = act.next(c)) {
            std::string cell = ".";
            if (t.chosen_in_row(r) == c) cell = "(1)";
            else if (t.is_choosable(r, c)) cell = "1";
            else if (t.is_admissible(r, c)) cell = "f";
            out << cell << std::string(5 - cell.size(), ' ');
        }
        out << "| " << mark_str(m.row[r]) << "\n";
    }
    out << "      ";
    for (int c = act.first(); c != -1; c = act.next(c)) {
        std::string s = mark_str(m.col[c]);
        out << s << std::string(5 - s.size(), ' ');
    }
    out << "\n";
    return out.str();
}

}  // namespace mislab
