#pragma once

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "nfam/construct.hpp"
#include "nfam/family.hpp"
#include "nfam/seq.hpp"

/* The constraint polytope and its lattice points.
 *
 * The polytope of an instance (r, n, center a, radius d) is cut out by
 *
 *     x_i >= 0                                   for 1 <= i <= n,
 *     sum_{i in I} x_i <= sum_{i in I} a_i + d   for 1 <= |I| <= u,
 *
 * with u = n - r + 1.  Membership does not iterate over index sets:
 * among the sets of size k, the binding one is the set of the k
 * largest deltas x_i - a_i, so it suffices to sort the deltas
 * descending and check the first u prefix sums against d.
 */
namespace nfam {

struct PolytopeSpec {
    Params params;

    explicit PolytopeSpec(Params p) : params(std::move(p)) { params.validate(); }

    bool contains(const IntSeq& x) const {
        const int n = params.n;
        if (static_cast<int>(x.size()) != n) {
            throw std::invalid_argument("point has wrong dimension");
        }
        std::vector<long long> delta(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] < 0) return false;
            delta[i] = x[i] - params.center[i];
        }
        std::sort(delta.begin(), delta.end(), std::greater<>());
        long long prefix = 0;
        const int u = params.u();
        for (int k = 0; k < u; ++k) {
            prefix += delta[static_cast<std::size_t>(k)];
            if (prefix > params.radius) return false;
        }
        return true;
    }

    // All lattice points.  The singleton inequalities bound the scan
    // box to prod [0, a_i + d].
    Family lattice_points() const {
        const int n = params.n;
        std::vector<IntSeq> out;
        IntSeq cur(static_cast<std::size_t>(n), 0);
        IntSeq cap(params.center);
        for (int& c : cap) c += params.radius;
        for (;;) {
            if (contains(cur)) out.push_back(cur);
            std::size_t i = 0;
            while (i < cur.size() && cur[i] == cap[i]) {
                cur[i] = 0;
                ++i;
            }
            if (i == cur.size()) break;
            ++cur[i];
        }
        return Family(n, std::move(out));
    }
};

}  // namespace nfam
