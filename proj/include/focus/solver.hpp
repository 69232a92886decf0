#ifndef FOCUS_SOLVER_HPP
#define FOCUS_SOLVER_HPP

#include <algorithm>
#include <cassert>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "focus/instance.hpp"
#include "focus/io.hpp"
#include "focus/springy.hpp"
#include "focus/weighted.hpp"
#include "focus/weighted_springy.hpp"

// Minimal propagation solver: a flat domain store, propagators run to a
// fixpoint, chronological depth-first search with full domain snapshots, and
// the bi-objective driver for the scheduling-with-rentals benchmark.

namespace focus {

class Propagator {
public:
    virtual ~Propagator() = default;
    /// Tightens domains in place; false signals a wipeout.
    virtual bool propagate(std::vector<IntInterval>& doms) const = 0;
};

struct Network {
    std::vector<IntInterval> vars;
    std::vector<std::shared_ptr<const Propagator>> constraints;
    std::vector<std::vector<IntInterval>> trail;

    int add_var(IntInterval d) {
        vars.push_back(d);
        return static_cast<int>(vars.size()) - 1;
    }
    void push() { trail.push_back(vars); }
    void pop() {
        vars = std::move(trail.back());
        trail.pop_back();
    }
};

/// Standard bounds filtering for "between lo and hi of the window take a value
/// above k": saturated counts force the undetermined ones.
inline std::optional<std::vector<IntInterval>> among_filter(std::vector<IntInterval> vars,
                                                            const AmongSpec& spec, int k) {
    int fixed_high = 0, possible_high = 0;
    for (int i = spec.s; i <= spec.e; ++i) {
        if (vars[i].lo > k) ++fixed_high;
        if (vars[i].hi > k) ++possible_high;
    }
    if (fixed_high > spec.hi || possible_high < spec.lo) return std::nullopt;
    if (fixed_high == spec.hi) {
        for (int i = spec.s; i <= spec.e; ++i)
            if (vars[i].lo <= k && vars[i].hi > k) vars[i] = vars[i].at_most(k);
    }
    if (possible_high == spec.lo) {
        for (int i = spec.s; i <= spec.e; ++i)
            if (vars[i].hi > k && vars[i].lo <= k) {
                vars[i] = vars[i].above(k);
                if (vars[i].is_empty()) return std::nullopt;
            }
    }
    return vars;
}

class AmongPropagator final : public Propagator {
public:
    AmongPropagator(std::vector<int> xs, AmongSpec spec, int k)
        : xs_(std::move(xs)), spec_(spec), k_(k) {}

    bool propagate(std::vector<IntInterval>& doms) const override {
        std::vector<IntInterval> window(xs_.size());
        for (size_t i = 0; i < xs_.size(); ++i) window[i] = doms[xs_[i]];
        AmongSpec local{0, static_cast<int>(xs_.size()) - 1, spec_.lo, spec_.hi};
        auto out = among_filter(std::move(window), local, k_);
        if (!out) return false;
        for (size_t i = 0; i < xs_.size(); ++i) doms[xs_[i]] = (*out)[i];
        return true;
    }

private:
    std::vector<int> xs_;
    AmongSpec spec_;
    int k_;
};

/// Wraps the variant filters over a slice of the domain store.
class FocusPropagator final : public Propagator {
public:
    FocusPropagator(std::vector<int> xs, int yc, int zc, FocusParams params,
                    SpringyOptions opts = {})
        : xs_(std::move(xs)), yc_(yc), zc_(zc), params_(params), opts_(opts) {}

    bool propagate(std::vector<IntInterval>& doms) const override {
        FocusInstance inst;
        inst.params = params_;
        inst.xs.reserve(xs_.size());
        for (int i : xs_) inst.xs.push_back(doms[i]);
        inst.yc = doms[yc_];
        if (is_weighted(params_.variant)) inst.zc = doms[zc_];

        std::optional<FocusInstance> out;
        switch (params_.variant) {
            case Variant::Focus:
            case Variant::Springy:
                out = springy_filter(std::move(inst), opts_);
                break;
            case Variant::Weighted:
                out = bc_filter_w(std::move(inst));
                break;
            case Variant::WeightedSpringy:
                out = bc_filter_wh(std::move(inst));
                break;
        }
        if (!out) return false;
        for (size_t i = 0; i < xs_.size(); ++i) doms[xs_[i]] = out->xs[i];
        doms[yc_] = out->yc;
        if (out->zc) doms[zc_] = *out->zc;
        return true;
    }

private:
    std::vector<int> xs_;
    int yc_;
    int zc_;
    FocusParams params_;
    SpringyOptions opts_;
};

/// Channel b = (x > k) with b a 0/1 variable.
class BoolChannelPropagator final : public Propagator {
public:
    BoolChannelPropagator(int x, int b, int k) : x_(x), b_(b), k_(k) {}

    bool propagate(std::vector<IntInterval>& doms) const override {
        IntInterval& x = doms[x_];
        IntInterval& b = doms[b_];
        if (b.lo >= 1) x = x.above(k_);
        if (b.hi <= 0) x = x.at_most(k_);
        if (x.lo > k_) b = b.with_min(1);
        if (x.hi <= k_) b = b.with_max(0);
        return !x.is_empty() && !b.is_empty();
    }

private:
    int x_, b_, k_;
};

/// Sum of 0/1 variables bounded above by an integer variable.
class SumLeqPropagator final : public Propagator {
public:
    SumLeqPropagator(std::vector<int> bs, int z) : bs_(std::move(bs)), z_(z) {}

    bool propagate(std::vector<IntInterval>& doms) const override {
        int lo_sum = 0;
        for (int i : bs_) lo_sum += doms[i].lo;
        IntInterval& z = doms[z_];
        if (lo_sum > z.hi) return false;
        z = z.with_min(lo_sum);
        if (z.is_empty()) return false;
        if (lo_sum == z.hi) {
            for (int i : bs_)
                if (doms[i].lo == 0) doms[i] = doms[i].with_max(0);
        }
        return true;
    }

private:
    std::vector<int> bs_;
    int z_;
};

/// Runs every propagator until no domain moves. Final domains are a fixpoint;
/// the sweep order does not affect them (asserted by tests).
inline bool propagate_fixpoint(Network& net) {
    for (;;) {
        std::vector<IntInterval> before = net.vars;
        for (const auto& c : net.constraints) {
            if (!c->propagate(net.vars)) return false;
            for (const auto& d : net.vars)
                if (d.is_empty()) return false;
        }
        if (net.vars == before) return true;
    }
}

/// The weighted constraint as a network: FOCUS on (xs, yc) plus per-variable
/// 0/1 channels whose sum is bounded by zc. Propagating this network is
/// strictly weaker than bc_filter_w on some instances.
inline Network decompose_w(const FocusInstance& inst) {
    assert(inst.params.variant == Variant::Weighted);
    Network net;
    std::vector<int> xs;
    for (const auto& x : inst.xs) xs.push_back(net.add_var(x));
    const int yc = net.add_var(inst.yc);
    const int zc = net.add_var(*inst.zc);
    std::vector<int> bs;
    for (int i = 0; i < inst.n(); ++i) bs.push_back(net.add_var({0, 1}));

    FocusParams fp = inst.params;
    fp.variant = Variant::Focus;
    fp.h = 0;
    net.constraints.push_back(std::make_shared<FocusPropagator>(xs, yc, -1, fp));
    for (int i = 0; i < inst.n(); ++i)
        net.constraints.push_back(
            std::make_shared<BoolChannelPropagator>(xs[i], bs[i], inst.params.k));
    net.constraints.push_back(std::make_shared<SumLeqPropagator>(bs, zc));
    return net;
}

struct SearchStats {
    long long nodes = 0;
    long long solutions = 0;
};

/// Depth-first search over the given branch variables: static lexicographic
/// order, values tried lower bound first. Reports each solution through the
/// callback (values of the branch variables); the callback may return false to
/// stop the search.
inline SearchStats search(Network& net, const std::vector<int>& branch_vars,
                          const std::function<bool(const std::vector<int>&)>& on_solution) {
    SearchStats stats;
    bool stop = false;

    std::function<void()> dive = [&]() {
        if (stop) return;
        ++stats.nodes;
        if (!propagate_fixpoint(net)) return;
        int pick = -1;
        for (int v : branch_vars)
            if (!net.vars[v].is_fixed()) {
                pick = v;
                break;
            }
        if (pick < 0) {
            ++stats.solutions;
            std::vector<int> vals;
            vals.reserve(branch_vars.size());
            for (int v : branch_vars) vals.push_back(net.vars[v].lo);
            if (!on_solution(vals)) stop = true;
            return;
        }
        const IntInterval dom = net.vars[pick];
        for (int v = dom.lo; v <= dom.hi && !stop; ++v) {
            net.push();
            net.vars[pick] = IntInterval::fixed(v);
            dive();
            net.pop();
        }
    };
    dive();
    return stats;
}

/// Scheduling-with-rentals driver: x_l > 0 marks a rented day. For every
/// cardinality budget y in yc's range, branch-and-bound minimizes the total
/// rented length, then dominated points are dropped. Returns the nondominated
/// (yc, zc) pairs; empty means unsatisfiable.
inline std::vector<std::pair<int, int>> pareto_rentals(const FocusInstance& inst,
                                                       const std::vector<AmongSpec>& amongs,
                                                       SearchStats* stats_out = nullptr) {
    assert(inst.params.variant == Variant::WeightedSpringy);
    std::vector<std::pair<int, int>> points;
    SearchStats total;

    // One root propagation pins the search range for the count objective.
    int y_lo = inst.yc.lo, y_hi = inst.yc.hi;
    {
        Network net;
        std::vector<int> xs;
        for (const auto& x : inst.xs) xs.push_back(net.add_var(x));
        const int yc = net.add_var(inst.yc);
        const int zc = net.add_var(*inst.zc);
        net.constraints.push_back(std::make_shared<FocusPropagator>(xs, yc, zc, inst.params));
        for (const auto& a : amongs) {
            std::vector<int> window(xs.begin() + a.s, xs.begin() + a.e + 1);
            net.constraints.push_back(
                std::make_shared<AmongPropagator>(window, a, inst.params.k));
        }
        if (!propagate_fixpoint(net)) {
            if (stats_out) *stats_out = total;
            return {};
        }
        y_lo = net.vars[yc].lo;
        y_hi = net.vars[yc].hi;
    }

    for (int y = y_lo; y <= y_hi; ++y) {
        int best = dp_inf;
        for (;;) {
            Network net;
            std::vector<int> xs;
            for (const auto& x : inst.xs) xs.push_back(net.add_var(x));
            const int yc = net.add_var(IntInterval::fixed(y));
            const int zc = net.add_var(inst.zc->with_max(best == dp_inf ? inst.zc->hi : best - 1));
            if (net.vars[zc].is_empty()) break;
            net.constraints.push_back(
                std::make_shared<FocusPropagator>(xs, yc, zc, inst.params));
            for (const auto& a : amongs) {
                std::vector<int> window(xs.begin() + a.s, xs.begin() + a.e + 1);
                net.constraints.push_back(
                    std::make_shared<AmongPropagator>(window, a, inst.params.k));
            }
            int found = -1;
            SearchStats s = search(net, xs, [&](const std::vector<int>&) {
                // With all x fixed the filter pins min(zc) to the exact
                // cheapest total length for this assignment.
                found = net.vars[zc].lo;
                return false;
            });
            total.nodes += s.nodes;
            total.solutions += s.solutions;
            if (found < 0) break;
            best = found;
        }
        if (best < dp_inf) points.emplace_back(y, best);
    }

    // Drop dominated points.
    std::vector<std::pair<int, int>> frontier;
    for (const auto& p : points) {
        bool dominated = false;
        for (const auto& q : points)
            if (q != p && q.first <= p.first && q.second <= p.second) {
                dominated = q.second < p.second || q.first < p.first;
                if (dominated) break;
            }
        if (!dominated) frontier.push_back(p);
    }
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    if (stats_out) *stats_out = total;
    return frontier;
}

} // namespace focus

#endif
