#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

#include "nfam/construct.hpp"
#include "nfam/seq.hpp"

/* Exact counting.
 *
 * Everything here is arbitrary-precision integer arithmetic.  The
 * binomial convention is C(m, k) = 0 for m < k or k < 0: binomials
 * count non-negative integer solutions of x_1 + ... + x_k <= m, so a
 * negative cap means zero solutions.
 */
namespace nfam {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(long long m, long long k) {
    if (k < 0 || m < k) return 0;
    k = std::min(k, m - k);
    BigInt num = 1;
    for (long long i = 1; i <= k; ++i) {
        num *= m - k + i;
        num /= i;  // exact: C(m-k+i, i) divides the running product
    }
    return num;
}

// sigma_k(a): sum over k-subsets of entry products; sigma_0 = 1.
// One-pass product recurrence over (1 + a_i t).
inline BigInt elementary_symmetric(const IntSeq& a, int k) {
    const int n = static_cast<int>(a.size());
    if (k < 0 || k > n) throw std::invalid_argument("symmetric polynomial index out of range");
    std::vector<BigInt> coeff(static_cast<std::size_t>(k) + 1, 0);
    coeff[0] = 1;
    for (int v : a) {
        for (int j = k; j >= 1; --j) {
            coeff[static_cast<std::size_t>(j)] += BigInt(v) * coeff[static_cast<std::size_t>(j - 1)];
        }
    }
    return coeff[static_cast<std::size_t>(k)];
}

struct SizeBreakdown {
    BigInt base_term = 0;              // layer i = 0
    std::vector<BigInt> layer_terms;   // layers i = 1 .. radius/u
    BigInt total = 0;
};

// Closed-form size of candidate_family(p):
//   sum_{j=0}^{n} C(d+j, j) sigma_{n-j}(a)
//   + sum_{i=1}^{d/u} sum_{j=u+1}^{n} (C(d-ui+j, j) - C(d-ui+u, j)) sigma_{n-j}(a + i*1)
// with d = radius, a = center, u = n-r+1.
inline SizeBreakdown closed_form_size(const Params& p) {
    p.validate();
    const int n = p.n;
    const int d = p.radius;
    const int u = p.u();
    SizeBreakdown out;
    for (int j = 0; j <= n; ++j) {
        out.base_term += binomial(d + j, j) * elementary_symmetric(p.center, n - j);
    }
    out.total = out.base_term;
    for (int i = 1; u * i <= d; ++i) {
        const IntSeq shifted = add_scalar(p.center, i);
        BigInt term = 0;
        for (int j = u + 1; j <= n; ++j) {
            term += (binomial(d - u * i + j, j) - binomial(d - u * i + u, j)) *
                    elementary_symmetric(shifted, n - j);
        }
        out.layer_terms.push_back(term);
        out.total += term;
    }
    return out;
}

// Exact size of the one-shell reference family in dimension n with
// prefix p and radius d:  sum_{j=0}^{p} C(p, j) C(n-j+d, d).
inline BigInt reference_size(int n, int p, int d) {
    if (p < 0 || p > n) throw std::invalid_argument("prefix length out of range");
    if (d < 0) throw std::invalid_argument("radius must be non-negative");
    BigInt out = 0;
    for (int j = 0; j <= p; ++j) {
        out += binomial(p, j) * binomial(n - j + d, d);
    }
    return out;
}

struct BalancedChoice {
    int radius = 0;
    IntSeq center;
};

struct BestBalanced {
    BigInt size = 0;
    std::vector<BalancedChoice> optima;  // every maximizing radius, smallest first
};

// Sweep radius over 0..s/r with the balanced center of weight
// s - r*radius; report the maximum closed-form size and all radii
// attaining it.
inline BestBalanced best_balanced_size(int n, int r, int s) {
    if (r < 2) throw std::invalid_argument("r must be at least 2");
    if (n < r) throw std::invalid_argument("n must be at least r");
    if (s < 0) throw std::invalid_argument("s must be non-negative");
    BestBalanced best;
    for (int d = 0; r * d <= s; ++d) {
        IntSeq a = balanced_partition(n, s - r * d);
        BigInt size = closed_form_size(Params::make_with_s(r, n, s, a, d)).total;
        if (best.optima.empty() || size > best.size) {
            best.size = size;
            best.optima.clear();
            best.optima.push_back({d, std::move(a)});
        } else if (size == best.size) {
            best.optima.push_back({d, std::move(a)});
        }
    }
    return best;
}

}  // namespace nfam
