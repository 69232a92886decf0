#ifndef FOCUS_FUZZ_HPP
#define FOCUS_FUZZ_HPP

#include <atomic>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "focus/io.hpp"
#include "focus/oracle.hpp"
#include "focus/rng.hpp"
#include "focus/springy.hpp"
#include "focus/weighted.hpp"
#include "focus/weighted_springy.hpp"

// Randomized differential testing of every filter against the brute-force
// closure. Instances are replayable: each trial derives its generator from
// (seed, trial index) alone, independent of thread scheduling.

namespace focus::fuzz {

/// Random instance with domains drawn from {[0,0], [1,1], [0,1]}.
/// Count and weight bounds are biased tight, where pruning happens.
inline FocusInstance random_instance(SplitMix64& rng, int n_max, Variant variant) {
    FocusInstance inst;
    inst.params.variant = variant;
    const int n_min = is_springy(variant) ? 2 : 1;
    const int n = rng.range(std::max(n_min, 1), std::max(n_max, n_min));
    for (int i = 0; i < n; ++i) {
        switch (rng.below(3)) {
            case 0: inst.xs.push_back({0, 0}); break;
            case 1: inst.xs.push_back({1, 1}); break;
            default: inst.xs.push_back({0, 1}); break;
        }
    }
    // Mostly the interesting threshold; occasionally degenerate ones.
    inst.params.k = rng.chance(4, 5) ? 0 : (rng.chance(1, 2) ? -1 : 1);
    if (is_springy(variant)) {
        inst.params.len = rng.range(2, n);
        inst.params.h = rng.range(0, std::min(inst.params.len - 2, 3));
    } else {
        inst.params.len = rng.range(1, n);
        inst.params.h = 0;
    }
    // Tight count bounds drive most of the pruning.
    inst.yc.lo = rng.range(0, 2);
    inst.yc.hi = inst.yc.lo + (rng.chance(2, 3) ? rng.range(0, 3) : rng.range(0, n));
    if (is_weighted(variant)) {
        const int zlo = rng.range(0, 2);
        inst.zc = IntInterval{zlo, zlo + (rng.chance(1, 2) ? rng.range(0, n + 2)
                                                           : rng.range(0, 2 * n))};
    }
    return inst;
}

struct Mismatch {
    FocusInstance input;
    std::string detail;
};

inline std::string describe(const std::optional<FocusInstance>& r) {
    if (!r) return "infeasible";
    std::string s = "xs";
    for (const auto& x : r->xs)
        s += " [" + std::to_string(x.lo) + "," + std::to_string(x.hi) + "]";
    s += " yc [" + std::to_string(r->yc.lo) + "," + std::to_string(r->yc.hi) + "]";
    if (r->zc) s += " zc [" + std::to_string(r->zc->lo) + "," + std::to_string(r->zc->hi) + "]";
    return s;
}

/// Runs the variant's filter and compares with the oracle closure.
inline std::optional<std::string> check_instance(const FocusInstance& inst) {
    std::optional<FocusInstance> got;
    switch (inst.params.variant) {
        case Variant::Focus:
        case Variant::Springy:
            got = springy_filter(inst);
            break;
        case Variant::Weighted:
            got = bc_filter_w(inst);
            break;
        case Variant::WeightedSpringy:
            got = bc_filter_wh(inst);
            break;
    }
    std::optional<FocusInstance> want = oracle::bc_closure(inst);
    if (got == want) return std::nullopt;
    return "filter: " + describe(got) + " | closure: " + describe(want);
}

struct Report {
    long long trials = 0;
    long long mismatches = 0;
    std::optional<Mismatch> first;
};

inline Variant variant_for_trial(SplitMix64& rng, const std::string& mix) {
    if (mix == "focus") return Variant::Focus;
    if (mix == "springy") return Variant::Springy;
    if (mix == "focusw") return Variant::Weighted;
    if (mix == "focuswh") return Variant::WeightedSpringy;
    switch (rng.below(4)) {
        case 0: return Variant::Focus;
        case 1: return Variant::Springy;
        case 2: return Variant::Weighted;
        default: return Variant::WeightedSpringy;
    }
}

/// Differential fuzzing over `trials` instances; deterministic for a given
/// (seed, trials, n_max, mix) regardless of the worker count.
inline Report run(std::uint64_t seed, long long trials, int n_max,
                  const std::string& mix = "mix", int jobs = 1) {
    Report rep;
    rep.trials = trials;
    std::mutex m;
    long long first_idx = -1;
    std::atomic<long long> next{0};

    auto worker = [&]() {
        for (;;) {
            const long long t = next.fetch_add(1);
            if (t >= trials) return;
            SplitMix64 rng(seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(t) + 1);
            const Variant v = variant_for_trial(rng, mix);
            FocusInstance inst = random_instance(rng, n_max, v);
            auto bad = check_instance(inst);
            if (bad) {
                std::lock_guard<std::mutex> lock(m);
                ++rep.mismatches;
                if (first_idx < 0 || t < first_idx) {
                    first_idx = t;
                    rep.first = Mismatch{inst, *bad};
                }
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return rep;
}

} // namespace focus::fuzz

#endif
