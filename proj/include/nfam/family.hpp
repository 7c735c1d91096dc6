#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nfam/seq.hpp"

/* Finite families of sequences, antichains, and down-set machinery.
 *
 * A Family is a finite subset of N^n held in canonical form: members
 * sorted lexicographically, no duplicates, all of dimension n.  Family
 * equality is extensional.  An Antichain additionally has pairwise
 * incomparable members; it is the canonical generator set of a
 * down-set.
 */
namespace nfam {

class Family {
public:
    Family() = default;

    explicit Family(int n) : n_(check_dim(n)) {}

    Family(int n, std::vector<IntSeq> members) : n_(check_dim(n)), members_(std::move(members)) {
        for (const IntSeq& m : members_) {
            if (static_cast<int>(m.size()) != n_) {
                throw std::invalid_argument("family member has wrong dimension");
            }
            require_nonnegative(m);
        }
        canonicalize();
    }

    int dimension() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    // Sorted lexicographically ascending.
    const std::vector<IntSeq>& members() const { return members_; }

    bool contains(const IntSeq& x) const {
        return std::binary_search(members_.begin(), members_.end(), x);
    }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const Family&) const = default;

private:
    static int check_dim(int n) {
        if (n < 0) throw std::invalid_argument("dimension must be non-negative");
        return n;
    }

    void canonicalize() {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    int n_ = 0;
    std::vector<IntSeq> members_;
};

class Antichain {
public:
    Antichain() = default;

    explicit Antichain(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("dimension must be non-negative");
    }

    // Validates pairwise incomparability.
    Antichain(int n, std::vector<IntSeq> members) : Antichain(Family(n, std::move(members))) {}

    explicit Antichain(Family f) : n_(f.dimension()), members_(f.members()) {
        for (std::size_t i = 0; i < members_.size(); ++i) {
            for (std::size_t j = 0; j < members_.size(); ++j) {
                if (i != j && leq(members_[i], members_[j])) {
                    throw std::invalid_argument("antichain members must be incomparable: " +
                                                to_string(members_[i]) + " precedes " +
                                                to_string(members_[j]));
                }
            }
        }
    }

    int dimension() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<IntSeq>& members() const { return members_; }

    Family as_family() const { return Family(n_, members_); }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const Antichain&) const = default;

private:
    int n_ = 0;
    std::vector<IntSeq> members_;
};

// The members of A maximal under componentwise <=.  For a down-set A
// this is its canonical generator antichain.
inline Antichain maximal_elements(const Family& A) {
    if (A.empty()) throw std::invalid_argument("maximal_elements of empty family");
    std::vector<IntSeq> out;
    for (const IntSeq& x : A) {
        bool dominated = false;
        for (const IntSeq& y : A) {
            if (x != y && leq(x, y)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(x);
    }
    return Antichain(Family(A.dimension(), std::move(out)));
}

// All y with y <= g for some generator g.  Finite: each generator
// bounds its own box.
inline Family downset_of(const Antichain& gens) {
    std::vector<IntSeq> out;
    IntSeq cur(static_cast<std::size_t>(gens.dimension()), 0);
    for (const IntSeq& g : gens) {
        // enumerate the box prod [0, g_i] by odometer increment
        std::fill(cur.begin(), cur.end(), 0);
        for (;;) {
            out.push_back(cur);
            std::size_t i = 0;
            while (i < cur.size() && cur[i] == g[i]) {
                cur[i] = 0;
                ++i;
            }
            if (i == cur.size()) break;
            ++cur[i];
        }
    }
    return Family(gens.dimension(), std::move(out));
}

// Down-closure D(A) of an arbitrary nonempty family.
inline Family down_closure(const Family& A) {
    if (A.empty()) return A;
    return downset_of(maximal_elements(A));
}

}  // namespace nfam
