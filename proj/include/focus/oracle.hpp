#ifndef FOCUS_ORACLE_HPP
#define FOCUS_ORACLE_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "focus/instance.hpp"

// Exhaustive ground truth for small instances. Everything here enumerates
// bound instantiations and disjoint-sequence covers directly from the
// definitions; none of it shares code with the filtering algorithms.

namespace focus::oracle {

struct Caps {
    int enumerate = 12; // max n for instantiation enumeration
    int closure = 10;   // max n for bc_closure
};

/// Calls fn once per assignment in which every variable sits at its lower or
/// upper bound. Fixed variables contribute a single choice.
inline void for_each_instantiation(const std::vector<IntInterval>& xs,
                                   const std::function<void(const std::vector<int>&)>& fn,
                                   int cap = Caps{}.enumerate) {
    const int n = static_cast<int>(xs.size());
    if (n > cap) throw std::invalid_argument("instance too large for oracle enumeration");
    std::vector<int> free_idx;
    std::vector<int> vals(n);
    for (int i = 0; i < n; ++i) {
        vals[i] = xs[i].lo;
        if (!xs[i].is_fixed()) free_idx.push_back(i);
    }
    const int u = static_cast<int>(free_idx.size());
    for (unsigned long long mask = 0; mask < (1ull << u); ++mask) {
        for (int b = 0; b < u; ++b) {
            const int i = free_idx[b];
            vals[i] = (mask >> b) & 1 ? xs[i].hi : xs[i].lo;
        }
        fn(vals);
    }
}

inline std::vector<std::vector<int>> enumerate_instantiations(const FocusInstance& inst,
                                                              int cap = Caps{}.enumerate) {
    std::vector<std::vector<int>> out;
    for_each_instantiation(inst.xs, [&](const std::vector<int>& v) { out.push_back(v); }, cap);
    return out;
}

/// (cardinality, total covered length) pairs, kept nondominated.
using ParetoSet = std::vector<std::pair<int, int>>;

inline void pareto_insert(ParetoSet& set, std::pair<int, int> p) {
    for (const auto& q : set)
        if (q.first <= p.first && q.second <= p.second) return;
    std::erase_if(set, [&](const std::pair<int, int>& q) {
        return p.first <= q.first && p.second <= q.second;
    });
    set.push_back(p);
}

inline void pareto_sort(ParetoSet& set) { std::sort(set.begin(), set.end()); }

namespace detail {

inline bool seq_ok(const std::vector<int>& vals, int i, int j, const FocusParams& p) {
    if (j - i + 1 > p.len) return false;
    if (is_springy(p.variant)) {
        if (vals[i] <= p.k || vals[j] <= p.k) return false;
        int lows = 0;
        for (int l = i; l <= j; ++l)
            if (vals[l] <= p.k) ++lows;
        return lows <= p.h;
    }
    for (int l = i; l <= j; ++l)
        if (vals[l] <= p.k) return false;
    return true;
}

// Plain recursion over every way of placing disjoint sequences.
inline void enumerate_covers(const std::vector<int>& vals, const FocusParams& p, int i,
                             int count, int weight, ParetoSet& out) {
    const int n = static_cast<int>(vals.size());
    if (i == n) {
        pareto_insert(out, {count, weight});
        return;
    }
    if (vals[i] <= p.k) enumerate_covers(vals, p, i + 1, count, weight, out);
    for (int j = i; j < n && j - i + 1 <= p.len; ++j)
        if (seq_ok(vals, i, j, p))
            enumerate_covers(vals, p, j + 1, count + 1, weight + (j - i + 1), out);
}

// Same answer as enumerate_covers, memoized per suffix so bc_closure stays
// affordable on fuzz corpora. Cross-checked against the plain recursion in
// the test suite.
inline ParetoSet suffix_pareto(const std::vector<int>& vals, const FocusParams& p) {
    const int n = static_cast<int>(vals.size());
    std::vector<ParetoSet> memo(n + 1);
    memo[n] = {{0, 0}};
    for (int i = n - 1; i >= 0; --i) {
        ParetoSet set;
        if (vals[i] <= p.k)
            for (const auto& q : memo[i + 1]) pareto_insert(set, q);
        for (int j = i; j < n && j - i + 1 <= p.len; ++j)
            if (seq_ok(vals, i, j, p))
                for (const auto& q : memo[j + 1])
                    pareto_insert(set, {q.first + 1, q.second + (j - i + 1)});
        memo[i] = std::move(set);
    }
    return memo[0];
}

} // namespace detail

/// Every feasible (|S|, total length) pair for a full assignment, Pareto
/// minimized. Empty when no valid cover exists (some high value cannot be
/// covered legally).
inline ParetoSet best_covers(const std::vector<int>& assignment, const FocusParams& params) {
    ParetoSet out;
    detail::enumerate_covers(assignment, params, 0, 0, 0, out);
    pareto_sort(out);
    return out;
}

/// Satisfiability for a full assignment against the instance's current yc/zc
/// upper bounds.
inline bool assignment_feasible(const FocusInstance& inst, const std::vector<int>& vals) {
    ParetoSet set = detail::suffix_pareto(vals, inst.params);
    for (const auto& [q, w] : set) {
        if (q > inst.yc.hi) continue;
        if (is_weighted(inst.params.variant) && w > inst.zc->hi) continue;
        return true;
    }
    return false;
}

/// Brute-force bounds-consistency closure: keeps each bound iff some
/// instantiation plus cover supports it, iterated to a fixpoint. This is the
/// correctness target for the filtering algorithms.
inline std::optional<FocusInstance> bc_closure(FocusInstance inst, Caps caps = {}) {
    inst.validate();
    const int n = inst.n();
    if (n > caps.closure) throw std::invalid_argument("instance too large for bc_closure");
    const int k = inst.params.k;
    const bool weighted = is_weighted(inst.params.variant);
    constexpr int big = 1 << 29;

    for (;;) {
        std::vector<char> low_support(n, 0), high_support(n, 0);
        bool feasible = false;
        int min_q = big;          // least cardinality within the zc budget
        int min_w_within_yc = big; // least weight within the yc budget

        for_each_instantiation(inst.xs, [&](const std::vector<int>& vals) {
            ParetoSet set = detail::suffix_pareto(vals, inst.params);
            bool ok = false;
            for (const auto& [q, w] : set) {
                if (!weighted || w <= inst.zc->hi) min_q = std::min(min_q, q);
                if (q <= inst.yc.hi) min_w_within_yc = std::min(min_w_within_yc, w);
                if (q <= inst.yc.hi && (!weighted || w <= inst.zc->hi)) ok = true;
            }
            if (!ok) return;
            feasible = true;
            for (int l = 0; l < n; ++l)
                (vals[l] <= k ? low_support[l] : high_support[l]) = 1;
        }, caps.enumerate);

        if (!feasible) return std::nullopt;

        bool changed = false;
        for (int l = 0; l < n; ++l) {
            IntInterval d = inst.xs[l];
            if (d.lo <= k && !low_support[l]) d = d.above(k);
            if (d.hi > k && !high_support[l]) d = d.at_most(k);
            if (d.is_empty()) return std::nullopt;
            if (d != inst.xs[l]) {
                inst.xs[l] = d;
                changed = true;
            }
        }
        if (min_q > inst.yc.lo) {
            inst.yc.lo = min_q;
            changed = true;
        }
        if (inst.yc.is_empty()) return std::nullopt;
        if (weighted) {
            if (min_w_within_yc > inst.zc->lo) {
                inst.zc->lo = min_w_within_yc;
                changed = true;
            }
            if (inst.zc->is_empty()) return std::nullopt;
        }
        if (!changed) return inst;
    }
}

/// Nondominated (cardinality, weight) pairs over all instantiations admitted
/// by `admit` (side constraints such as among windows; pass nullptr for none).
inline ParetoSet pareto_frontier(const std::vector<IntInterval>& xs, const FocusParams& params,
                                 const std::function<bool(const std::vector<int>&)>& admit = nullptr,
                                 int cap = Caps{}.enumerate) {
    ParetoSet out;
    for_each_instantiation(xs, [&](const std::vector<int>& vals) {
        if (admit && !admit(vals)) return;
        for (const auto& p : detail::suffix_pareto(vals, params)) pareto_insert(out, p);
    }, cap);
    pareto_sort(out);
    return out;
}

} // namespace focus::oracle

#endif
