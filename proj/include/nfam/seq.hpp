#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

/* Sequences of non-negative integers with componentwise order.
 *
 * An IntSeq is a point of N^n.  The partial order is componentwise <=,
 * the join is the componentwise max, and the weight is the entry sum.
 * All operations are pure; sequences are plain vectors with value
 * semantics.
 */
namespace nfam {

using IntSeq = std::vector<int>;

inline void require_same_dimension(const IntSeq& x, const IntSeq& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(x.size()) +
                                    " vs " + std::to_string(y.size()));
    }
}

inline void require_nonnegative(const IntSeq& x) {
    for (int v : x) {
        if (v < 0) throw std::invalid_argument("sequence entry must be non-negative");
    }
}

// |x| = sum of entries.
inline long long weight(const IntSeq& x) {
    return std::accumulate(x.begin(), x.end(), 0LL);
}

// Componentwise max of two sequences.
inline IntSeq join(const IntSeq& x, const IntSeq& y) {
    require_same_dimension(x, y);
    IntSeq out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::max(x[i], y[i]);
    return out;
}

// Componentwise max of a nonempty list.
inline IntSeq join(std::span<const IntSeq> xs) {
    if (xs.empty()) throw std::invalid_argument("join of empty list");
    IntSeq out = xs[0];
    for (std::size_t k = 1; k < xs.size(); ++k) out = join(out, xs[k]);
    return out;
}

// x <= y componentwise.
inline bool leq(const IntSeq& x, const IntSeq& y) {
    require_same_dimension(x, y);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > y[i]) return false;
    }
    return true;
}

// Truncated difference: (a \ b)_i = max(a_i - b_i, 0).
// Satisfies |setminus(a,b)| = |join(a,b)| - |b|.
inline IntSeq setminus(const IntSeq& a, const IntSeq& b) {
    require_same_dimension(a, b);
    IntSeq out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i] - b[i], 0);
    return out;
}

inline IntSeq zeros(int n) {
    if (n < 0) throw std::invalid_argument("dimension must be non-negative");
    return IntSeq(static_cast<std::size_t>(n), 0);
}

inline IntSeq ones(int n) {
    if (n < 0) throw std::invalid_argument("dimension must be non-negative");
    return IntSeq(static_cast<std::size_t>(n), 1);
}

// Standard basis vector e_i (0-based index).
inline IntSeq unit(int n, int i) {
    IntSeq out = zeros(n);
    if (i < 0 || i >= n) throw std::invalid_argument("unit index out of range");
    out[static_cast<std::size_t>(i)] = 1;
    return out;
}

// First p coordinates 1, the rest 0.
inline IntSeq ones_prefix(int n, int p) {
    if (p < 0 || p > n) throw std::invalid_argument("prefix length out of range");
    IntSeq out = zeros(n);
    std::fill(out.begin(), out.begin() + p, 1);
    return out;
}

inline IntSeq add(const IntSeq& x, const IntSeq& y) {
    require_same_dimension(x, y);
    IntSeq out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
    return out;
}

inline IntSeq add_scalar(const IntSeq& x, int c) {
    IntSeq out(x);
    for (int& v : out) v += c;
    return out;
}

inline std::string to_string(const IntSeq& x) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) os << ',';
        os << x[i];
    }
    os << ')';
    return os.str();
}

}  // namespace nfam
