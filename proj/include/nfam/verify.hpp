#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nfam/family.hpp"
#include "nfam/seq.hpp"

/* Property verifiers for arbitrary families.
 *
 * is_r_wise_s_union ranges over r-multisets of the maximal elements
 * only: join and weight are monotone under the componentwise order, so
 * the worst r-fold join is attained on maximal members, and join
 * idempotence makes multisets equivalent to tuples.
 */
namespace nfam {

// Down-set check by one-step decrements; sufficient by transitivity.
// The empty family is vacuously a down-set.
inline bool is_downset(const Family& A) {
    for (const IntSeq& x : A) {
        IntSeq y = x;
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (y[i] == 0) continue;
            --y[i];
            if (!A.contains(y)) return false;
            ++y[i];
        }
    }
    return true;
}

struct UnionViolation {
    std::vector<IntSeq> multiset;  // offending r members (with repetition)
    IntSeq join_value;
    long long join_weight = 0;
};

// First r-multiset of maximal elements whose join exceeds the budget,
// if any.  Search prunes on the running join weight, which only grows.
inline std::optional<UnionViolation> find_union_violation(const Family& A, int r, long long s) {
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    if (A.empty()) return std::nullopt;
    const std::vector<IntSeq> gens = maximal_elements(A).members();
    std::vector<std::size_t> pick;
    std::optional<UnionViolation> found;
    auto rec = [&](auto&& self, std::size_t from, const IntSeq& acc) -> bool {
        if (static_cast<int>(pick.size()) == r) {
            if (weight(acc) > s) {
                UnionViolation v;
                for (std::size_t idx : pick) v.multiset.push_back(gens[idx]);
                v.join_value = acc;
                v.join_weight = weight(acc);
                found = std::move(v);
                return true;
            }
            return false;
        }
        for (std::size_t i = from; i < gens.size(); ++i) {
            pick.push_back(i);
            if (self(self, i, join(acc, gens[i]))) return true;
            pick.pop_back();
        }
        return false;
    };
    rec(rec, 0, zeros(A.dimension()));
    return found;
}

inline bool is_r_wise_s_union(const Family& A, int r, long long s) {
    return !find_union_violation(A, r, s).has_value();
}

struct Profile {
    IntSeq maxima;               // componentwise maxima of the family
    int radius = 0;              // (|maxima| - s) / (n - r)
    IntSeq center;               // maxima - radius*1
    std::vector<IntSeq> peaks;   // center + radius*e_i for each i
    bool assumption_holds = false;  // all peaks are members
};

enum class ProfileStatus {
    ok,
    dimension_too_small,  // n <= r, the divisor n - r vanishes
    not_divisible,        // n - r does not divide |maxima| - s
    negative_radius,
    negative_center,
};

struct ProfileResult {
    ProfileStatus status = ProfileStatus::ok;
    std::optional<Profile> profile;
    std::string detail;

    bool ok() const { return status == ProfileStatus::ok; }
};

inline const char* to_string(ProfileStatus st) {
    switch (st) {
        case ProfileStatus::ok: return "ok";
        case ProfileStatus::dimension_too_small: return "dimension_too_small";
        case ProfileStatus::not_divisible: return "not_divisible";
        case ProfileStatus::negative_radius: return "negative_radius";
        case ProfileStatus::negative_center: return "negative_center";
    }
    return "unknown";
}

// Derive (maxima, radius, center, peaks) from a family and check that
// every peak is a member.  The four failure modes are reported
// distinctly; only dimension_too_small is a hard precondition.
inline ProfileResult derive_profile(const Family& A, int r, long long s) {
    if (A.empty()) throw std::invalid_argument("profile of empty family");
    const int n = A.dimension();
    ProfileResult res;
    if (n <= r) {
        res.status = ProfileStatus::dimension_too_small;
        res.detail = "need n > r, got n = " + std::to_string(n) + ", r = " + std::to_string(r);
        return res;
    }
    IntSeq maxima = zeros(n);
    for (const IntSeq& x : A) {
        for (std::size_t i = 0; i < x.size(); ++i) maxima[i] = std::max(maxima[i], x[i]);
    }
    const long long excess = weight(maxima) - s;
    const long long div = n - r;
    if (excess % div != 0) {
        res.status = ProfileStatus::not_divisible;
        res.detail = "total maxima exceed s by " + std::to_string(excess) +
                     ", not a multiple of n - r = " + std::to_string(div);
        return res;
    }
    const long long radius = excess / div;
    if (radius < 0) {
        res.status = ProfileStatus::negative_radius;
        res.detail = "derived radius " + std::to_string(radius) + " is negative";
        return res;
    }
    Profile prof;
    prof.maxima = maxima;
    prof.radius = static_cast<int>(radius);
    prof.center = maxima;
    for (int& c : prof.center) {
        c -= prof.radius;
        if (c < 0) {
            res.status = ProfileStatus::negative_center;
            res.detail = "some coordinate maximum is below the derived radius " +
                         std::to_string(radius);
            return res;
        }
    }
    prof.assumption_holds = true;
    for (int i = 0; i < n; ++i) {
        IntSeq peak = prof.center;
        peak[static_cast<std::size_t>(i)] += prof.radius;
        if (!A.contains(peak)) prof.assumption_holds = false;
        prof.peaks.push_back(std::move(peak));
    }
    res.profile = std::move(prof);
    return res;
}

// Maximum of sum_{i in I} x_i over the family; I holds 0-based
// coordinate indices.
inline long long subset_max(const Family& A, const std::vector<int>& I) {
    if (I.empty()) throw std::invalid_argument("index set must be nonempty");
    for (int i : I) {
        if (i < 0 || i >= A.dimension()) throw std::invalid_argument("index out of range");
    }
    long long best = 0;
    bool first = true;
    for (const IntSeq& x : A) {
        long long sum = 0;
        for (int i : I) sum += x[static_cast<std::size_t>(i)];
        if (first || sum > best) best = sum;
        first = false;
    }
    if (first) throw std::invalid_argument("subset_max of empty family");
    return best;
}

}  // namespace nfam
