#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "mislab/common.hpp"

namespace mislab {

// Fixed-capacity set of small integers packed into 64-bit words.
// Capacity is the number of vertices of the owning graph; all set
// operations require equal capacities. Trailing bits stay zero so that
// equality and popcounts work word-wise.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_(words(n), 0) {}

    static Bitset full(int n) {
        Bitset b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }

    int capacity() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void assign(int i, bool v) { v ? set(i) : reset(i); }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    // set difference: *this \ o
    Bitset& andnot_assign(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset andnot(Bitset a, const Bitset& b) { return a.andnot_assign(b); }

    bool operator==(const Bitset& o) const = default;

    bool intersects(const Bitset& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    // First set bit, or -1.
    int first() const { return scan(0); }
    // Next set bit strictly after i, or -1.
    int next(int i) const { return scan(i + 1); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v != -1; v = next(v)) out.push_back(v);
        return out;
    }

    uint64_t word(size_t k) const { return w_[k]; }
    size_t word_count() const { return w_.size(); }

private:
    static size_t words(int n) { return size_t(n + 63) / 64; }

    int scan(int from) const {
        if (from >= n_) return -1;
        size_t k = size_t(from) >> 6;
        uint64_t w = w_[k] & (~uint64_t(0) << (from & 63));
        while (true) {
            if (w) return int(k * 64 + std::countr_zero(w));
            if (++k == w_.size()) return -1;
            w = w_[k];
        }
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace mislab
