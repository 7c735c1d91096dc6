#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nfam/family.hpp"
#include "nfam/seq.hpp"

/* Construction of the layered candidate families.
 *
 * An instance is governed by (r, n, s, center, radius) with
 * |center| = s - r*radius.  The candidate family is the union of the
 * down-sets of upper shells
 *
 *     sphere(center + i*1, radius - u*i)   for  0 <= i <= radius/u,
 *
 * where u = n - r + 1.  Every shell has constant weight, so it is an
 * antichain and its down-set is a union of boxes.
 */
namespace nfam {

struct Params {
    int r = 2;       // arity of the union condition
    int n = 2;       // ambient dimension
    int s = 0;       // weight budget for r-fold joins
    int radius = 0;  // shell radius d
    IntSeq center;   // shell center a, |center| = s - r*radius

    int u() const { return n - r + 1; }

    // s is derived as |center| + r*radius.
    static Params make(int r, int n, IntSeq center, int radius) {
        long long w = weight(center);
        long long s = w + static_cast<long long>(r) * radius;
        Params p{r, n, static_cast<int>(s), radius, std::move(center)};
        p.validate();
        return p;
    }

    static Params make_with_s(int r, int n, int s, IntSeq center, int radius) {
        Params p{r, n, s, radius, std::move(center)};
        p.validate();
        return p;
    }

    void validate() const {
        if (r < 2) throw std::invalid_argument("r must be at least 2");
        if (n < r) throw std::invalid_argument("n must be at least r");
        if (radius < 0) throw std::invalid_argument("radius must be non-negative");
        if (static_cast<int>(center.size()) != n) {
            throw std::invalid_argument("center must have dimension n");
        }
        require_nonnegative(center);
        if (weight(center) != static_cast<long long>(s) - static_cast<long long>(r) * radius) {
            throw std::invalid_argument("center weight must equal s - r*radius");
        }
    }
};

// Upper shell U(center, radius): all center + eps with |eps| = radius.
// Size C(radius + n - 1, n - 1).
inline Family sphere(const IntSeq& center, int radius) {
    if (radius < 0) throw std::invalid_argument("radius must be non-negative");
    require_nonnegative(center);
    const int n = static_cast<int>(center.size());
    std::vector<IntSeq> out;
    if (n == 0) {
        if (radius == 0) out.push_back(center);
        return Family(0, std::move(out));
    }
    IntSeq eps(center.size(), 0);
    // enumerate compositions of radius into n parts
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            eps[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(add(center, eps));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            eps[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, radius);
    return Family(n, std::move(out));
}

// Union of shell down-sets over all layers.  Layers overlap for small
// u; set semantics absorb the overlap.
inline Family candidate_family(const Params& p) {
    p.validate();
    std::vector<IntSeq> out;
    const int u = p.u();
    for (int i = 0; u * i <= p.radius; ++i) {
        Family layer = downset_of(Antichain(sphere(add_scalar(p.center, i), p.radius - u * i)));
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return Family(p.n, std::move(out));
}

// Entries differ pairwise by at most 1 and sum to total; canonical
// form is sorted descending.
inline IntSeq balanced_partition(int n, int total) {
    if (n < 1) throw std::invalid_argument("need at least one part");
    if (total < 0) throw std::invalid_argument("total must be non-negative");
    IntSeq out(static_cast<std::size_t>(n), total / n);
    for (int i = 0; i < total % n; ++i) ++out[static_cast<std::size_t>(i)];
    return out;
}

// The one-shell reference family D(U(ones_prefix(n,p), s/r)) with
// p = s mod r.  Coincides with candidate_family at that center when
// the shell radius is below u, i.e. for all large enough n.
inline Family reference_family(int r, int s, int n) {
    if (r < 2) throw std::invalid_argument("r must be at least 2");
    if (s < 0) throw std::invalid_argument("s must be non-negative");
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    const int p = s % r;
    const int d = s / r;
    if (n < p) {
        throw std::invalid_argument("dimension too small: need n >= s mod r = " + std::to_string(p));
    }
    return downset_of(Antichain(sphere(ones_prefix(n, p), d)));
}

}  // namespace nfam
