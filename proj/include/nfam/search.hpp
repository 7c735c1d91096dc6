#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "nfam/census.hpp"
#include "nfam/construct.hpp"
#include "nfam/family.hpp"
#include "nfam/seq.hpp"

/* Exact maximum-size search for r-wise s-union families.
 *
 * Search space reductions, each lossless:
 *   - a maximum family may be taken down-closed (joins only see maximal
 *     members), so the search ranges over antichains of maximal elements;
 *   - every member has weight at most s (r copies of one member witness
 *     this), so the universe {x : |x| <= s} is finite;
 *   - candidates are ordered by descending weight, so nothing chosen
 *     later can dominate an earlier choice and chosen sets stay
 *     antichains by skipping dominated candidates.
 *
 * Branch and bound over that universe: bound = size of the down-set of
 * the chosen generators plus everything still addable.  Subtrees are
 * pruned only when the bound is strictly below the best size found, so
 * every optimum is visited regardless of worker timing; the reported
 * optima set is deterministic even with a lagging shared bound.
 */
namespace nfam {

// Raised when an instance exceeds the configured exact-search limits.
class guard_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct SearchOptions {
    long long max_universe = 10000;  // cap on |{x : |x| <= s}|
    int max_antichain = 64;          // cap on generators per explored family
    bool all_optima = false;         // collect every optimal family, not one witness
    int threads = 1;                 // 1 = sequential reference path
};

struct SearchReport {
    int n = 0;
    int r = 0;
    int s = 0;
    long long universe_size = 0;
    long long search_max = 0;
    std::vector<Antichain> optima;  // maximal-element sets of optimal down-sets
    bool optima_complete = false;   // true when every optimum is listed
    long long nodes = 0;            // explored branch nodes; varies with threads

    // Comparison against the best balanced candidate family; absent
    // when n < r, where no candidate family exists.
    std::optional<BestBalanced> conjectured;
    bool match = false;
    bool unique_strict = false;             // every optimum is a candidate family verbatim
    bool unique_up_to_permutation = false;  // ... after some coordinate relabeling
};

// Coordinate relabeling: member x maps to y with y[i] = x[perm[i]].
inline Family apply_permutation(const Family& A, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != A.dimension()) {
        throw std::invalid_argument("permutation length must match dimension");
    }
    std::vector<IntSeq> out;
    out.reserve(A.size());
    for (const IntSeq& x : A) {
        IntSeq y(x.size());
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = x[static_cast<std::size_t>(perm[i])];
        out.push_back(std::move(y));
    }
    return Family(A.dimension(), std::move(out));
}

// Equality after some coordinate permutation.  n! probes; fine at the
// dimensions exact search can reach anyway.
inline bool permutation_equivalent(const Family& A, const Family& B) {
    if (A.dimension() != B.dimension() || A.size() != B.size()) return false;
    std::vector<int> perm(static_cast<std::size_t>(A.dimension()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (apply_permutation(A, perm) == B) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace detail {

struct SearchUniverse {
    int n = 0;
    int r = 0;
    int s = 0;
    std::size_t words = 0;
    std::vector<IntSeq> elems;            // weight descending, then lexicographic
    std::vector<std::uint64_t> downmask;  // per element, bitmap of its down-set

    const std::uint64_t* mask(std::size_t i) const { return downmask.data() + i * words; }
};

inline long long popcount(const std::uint64_t* m, std::size_t words) {
    long long total = 0;
    for (std::size_t w = 0; w < words; ++w) total += std::popcount(m[w]);
    return total;
}

inline void mask_or(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w) dst[w] |= src[w];
}

inline SearchUniverse build_universe(int n, int r, int s) {
    SearchUniverse u;
    u.n = n;
    u.r = r;
    u.s = s;
    IntSeq cur = zeros(n);
    auto gen = [&](auto&& self, int coord, int rem) -> void {
        if (coord == n) {
            u.elems.push_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[static_cast<std::size_t>(coord)] = v;
            self(self, coord + 1, rem - v);
        }
        cur[static_cast<std::size_t>(coord)] = 0;
    };
    gen(gen, 0, s);
    std::sort(u.elems.begin(), u.elems.end(), [](const IntSeq& a, const IntSeq& b) {
        const long long wa = weight(a), wb = weight(b);
        if (wa != wb) return wa > wb;
        return a < b;
    });
    std::map<IntSeq, std::size_t> index;
    for (std::size_t i = 0; i < u.elems.size(); ++i) index.emplace(u.elems[i], i);
    u.words = (u.elems.size() + 63) / 64;
    u.downmask.assign(u.elems.size() * u.words, 0);
    for (std::size_t i = 0; i < u.elems.size(); ++i) {
        std::uint64_t* m = u.downmask.data() + i * u.words;
        const IntSeq& x = u.elems[i];
        IntSeq y = zeros(u.n);
        for (;;) {  // odometer over the box [0, x]
            const std::size_t j = index.at(y);
            m[j / 64] |= std::uint64_t{1} << (j % 64);
            std::size_t k = 0;
            while (k < y.size() && y[k] == x[k]) {
                y[k] = 0;
                ++k;
            }
            if (k == y.size()) break;
            ++y[k];
        }
    }
    return u;
}

// True when every join of cand with at most r-1 chosen members stays
// within the weight budget.  A partial join already over budget is
// itself a violating multiset, so recursion stops there; multisets
// reduce to subsets because join is idempotent.
inline bool compatible(const SearchUniverse& u, const std::vector<int>& chosen, int cand) {
    auto rec = [&](auto&& self, std::size_t from, const IntSeq& acc, int depth) -> bool {
        if (depth == u.r - 1) return true;
        for (std::size_t i = from; i < chosen.size(); ++i) {
            const IntSeq nxt = join(acc, u.elems[static_cast<std::size_t>(chosen[i])]);
            if (weight(nxt) > u.s) return false;
            if (!self(self, i + 1, nxt, depth + 1)) return false;
        }
        return true;
    };
    return rec(rec, 0, u.elems[static_cast<std::size_t>(cand)], 0);
}

struct Task {
    std::vector<int> chosen;
    std::vector<std::uint64_t> mask;
    std::vector<int> avail;
};

struct TaskResult {
    long long best = -1;
    std::vector<std::vector<IntSeq>> optima;  // sorted member lists at size == best
    long long nodes = 0;
};

inline void record(const SearchUniverse& u, const std::vector<int>& chosen, long long size,
                   bool all_optima, TaskResult& out) {
    if (size < out.best) return;
    std::vector<IntSeq> members;
    members.reserve(chosen.size());
    for (int i : chosen) members.push_back(u.elems[static_cast<std::size_t>(i)]);
    std::sort(members.begin(), members.end());
    if (size > out.best) {
        out.best = size;
        out.optima.clear();
        out.optima.push_back(std::move(members));
    } else if (all_optima) {
        out.optima.push_back(std::move(members));
    } else if (members < out.optima.front()) {
        out.optima.front() = std::move(members);  // canonical witness: lexicographic minimum
    }
}

inline void dfs(const SearchUniverse& u, const SearchOptions& opts, std::vector<int>& chosen,
                const std::vector<std::uint64_t>& cmask, const std::vector<int>& avail,
                std::atomic<long long>& shared_best, std::atomic<bool>& aborted,
                TaskResult& out) {
    if (aborted.load(std::memory_order_relaxed)) return;
    ++out.nodes;
    const long long size = popcount(cmask.data(), u.words);
    record(u, chosen, size, opts.all_optima, out);
    long long prev = shared_best.load(std::memory_order_relaxed);
    while (prev < size && !shared_best.compare_exchange_weak(prev, size)) {
    }

    std::vector<std::uint64_t> childmask(u.words);
    std::vector<std::uint64_t> boundmask(u.words);
    std::vector<int> childavail;
    for (std::size_t idx = 0; idx < avail.size(); ++idx) {
        const int f = avail[idx];
        std::copy(cmask.begin(), cmask.end(), childmask.begin());
        mask_or(childmask.data(), u.mask(static_cast<std::size_t>(f)), u.words);
        chosen.push_back(f);
        childavail.clear();
        for (std::size_t j = idx + 1; j < avail.size(); ++j) {
            const int g = avail[j];
            if (leq(u.elems[static_cast<std::size_t>(g)], u.elems[static_cast<std::size_t>(f)])) continue;
            if (!compatible(u, chosen, g)) continue;
            childavail.push_back(g);
        }
        std::copy(childmask.begin(), childmask.end(), boundmask.begin());
        for (int g : childavail) mask_or(boundmask.data(), u.mask(static_cast<std::size_t>(g)), u.words);
        const long long bound = popcount(boundmask.data(), u.words);
        // Strict pruning only: an equal bound may still hide equal-size
        // optima, and skipping those would make the optima set depend
        // on exploration order.
        if (bound >= shared_best.load(std::memory_order_relaxed)) {
            if (static_cast<int>(chosen.size()) > opts.max_antichain) {
                throw guard_error("antichain cap " + std::to_string(opts.max_antichain) +
                                  " exceeded during search");
            }
            dfs(u, opts, chosen, childmask, childavail, shared_best, aborted, out);
        }
        chosen.pop_back();
    }
}

}  // namespace detail

inline SearchReport max_family_search(int n, int r, int s, const SearchOptions& opts = {}) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (r < 2) throw std::invalid_argument("r must be at least 2");
    if (s < 0) throw std::invalid_argument("s must be non-negative");
    if (opts.threads < 1) throw std::invalid_argument("threads must be at least 1");
    if (opts.max_universe < 1 || opts.max_antichain < 1) {
        throw std::invalid_argument("search caps must be positive");
    }
    const BigInt universe_count = binomial(n + s, n);
    if (universe_count > opts.max_universe) {
        throw guard_error("universe of " + universe_count.str() +
                          " vectors exceeds the exact-search cap " +
                          std::to_string(opts.max_universe));
    }

    const detail::SearchUniverse u = detail::build_universe(n, r, s);

    // One task per choice of first generator; workers pull tasks from a
    // shared cursor and merge deterministically afterwards.
    std::vector<detail::Task> tasks(u.elems.size());
    for (std::size_t i = 0; i < u.elems.size(); ++i) {
        detail::Task& t = tasks[i];
        t.chosen.push_back(static_cast<int>(i));
        t.mask.assign(u.words, 0);
        detail::mask_or(t.mask.data(), u.mask(i), u.words);
        for (std::size_t j = i + 1; j < u.elems.size(); ++j) {
            if (leq(u.elems[j], u.elems[i])) continue;
            if (!detail::compatible(u, t.chosen, static_cast<int>(j))) continue;
            t.avail.push_back(static_cast<int>(j));
        }
    }

    std::vector<detail::TaskResult> results(tasks.size());
    std::atomic<long long> shared_best{0};
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> aborted{false};
    std::exception_ptr error;
    std::mutex error_mu;

    auto worker = [&]() {
        for (;;) {
            if (aborted.load()) return;
            const std::size_t t = cursor.fetch_add(1);
            if (t >= tasks.size()) return;
            try {
                std::vector<int> chosen = tasks[t].chosen;
                detail::dfs(u, opts, chosen, tasks[t].mask, tasks[t].avail, shared_best, aborted,
                            results[t]);
            } catch (...) {
                const std::scoped_lock lock(error_mu);
                if (!error) error = std::current_exception();
                aborted.store(true);
                return;
            }
        }
    };

    if (opts.threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(opts.threads));
        for (int t = 0; t < opts.threads; ++t) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    SearchReport report;
    report.n = n;
    report.r = r;
    report.s = s;
    report.universe_size = static_cast<long long>(u.elems.size());
    report.optima_complete = opts.all_optima;

    long long best = 0;
    for (const detail::TaskResult& res : results) {
        best = std::max(best, res.best);
        report.nodes += res.nodes;
    }
    report.search_max = best;

    std::vector<std::vector<IntSeq>> lists;
    for (detail::TaskResult& res : results) {
        if (res.best != best) continue;
        for (std::vector<IntSeq>& members : res.optima) lists.push_back(std::move(members));
    }
    if (!opts.all_optima && lists.size() > 1) {
        std::vector<IntSeq> keep = std::move(*std::min_element(lists.begin(), lists.end()));
        lists.clear();
        lists.push_back(std::move(keep));
    }
    std::sort(lists.begin(), lists.end());
    if (lists.empty()) lists.push_back({});  // empty family; unreachable for s >= 0
    for (std::vector<IntSeq>& members : lists) {
        report.optima.emplace_back(Family(n, std::move(members)));
    }

    if (n >= r) {
        report.conjectured = best_balanced_size(n, r, s);
        report.match = BigInt(report.search_max) == report.conjectured->size;
        std::vector<Antichain> targets;
        for (const BalancedChoice& choice : report.conjectured->optima) {
            targets.push_back(
                maximal_elements(candidate_family(Params::make(r, n, choice.center, choice.radius))));
        }
        bool strict = true;
        bool perm = true;
        for (const Antichain& opt : report.optima) {
            bool here_strict = false;
            bool here_perm = false;
            for (const Antichain& tgt : targets) {
                if (opt.as_family() == tgt.as_family()) {
                    here_strict = true;
                    here_perm = true;
                    break;
                }
                if (permutation_equivalent(opt.as_family(), tgt.as_family())) here_perm = true;
            }
            strict = strict && here_strict;
            perm = perm && here_perm;
        }
        report.unique_strict = report.match && strict;
        report.unique_up_to_permutation = report.match && perm;
    }
    return report;
}

// Search plus conjecture comparison; collects the full optima set so
// the uniqueness verdicts quantify over every optimum.
inline SearchReport check_conjecture(int n, int r, int s, SearchOptions opts = {}) {
    if (n < r) throw std::invalid_argument("conjecture comparison needs n >= r");
    opts.all_optima = true;
    return max_family_search(n, r, s, opts);
}

}  // namespace nfam
