// Acceptance suite: one line per criterion, exact tolerances pinned in code.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "focus/fuzz.hpp"
#include "focus/oracle.hpp"
#include "focus/rng.hpp"
#include "focus/solver.hpp"

#include "fixtures.hpp"

using namespace focus;
using fixtures::make;
using fixtures::off;
using fixtures::on;
using fixtures::u;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& fn) {
    std::string detail;
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

double median_ms(const std::function<void()>& fn, int samples) {
    std::vector<double> times;
    for (int s = 0; s < samples; ++s) {
        auto t0 = Clock::now();
        fn();
        auto t1 = Clock::now();
        times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

std::vector<IntInterval> periodic_xs(int n) {
    std::vector<IntInterval> xs;
    xs.reserve(n);
    for (int i = 0; i < n; ++i) {
        switch (i % 5) {
            case 0:
            case 2: xs.push_back({1, 1}); break;
            case 1: xs.push_back({0, 1}); break;
            default: xs.push_back({0, 0}); break;
        }
    }
    return xs;
}

bool weakly_dominates(const std::vector<std::pair<int, int>>& strong,
                      const std::vector<std::pair<int, int>>& weak) {
    for (const auto& p : weak) {
        bool covered = false;
        for (const auto& q : strong)
            if (q.first <= p.first && q.second <= p.second) covered = true;
        if (!covered) return false;
    }
    return true;
}

} // namespace

int main() {
    criterion(1, "worked-example table reproduced bit-exactly in under 1 ms", [](std::string& d) {
        auto inst = make(fixtures::example2(), Variant::Weighted, 0, 5, 0, {2, 2},
                         IntInterval{7, 7});
        const DpCell expected[3][8] = {
            {{1, 1}, {1, dp_inf}, {2, 1}, {2, 2}, {2, dp_inf}, {3, 1}, {3, dp_inf}, {4, 1}},
            {{}, {1, 2}, {1, 3}, {1, 4}, {1, dp_inf}, {2, 1}, {2, dp_inf}, {3, 1}},
            {{}, {}, {}, {}, {1, 5}, {2, 1}, {2, 2}, {2, 3}},
        };
        auto g = build_dp_w(inst.xs, inst.params, inst.zc->hi);
        if (!g || g->rows != 3) {
            d = "table shape wrong";
            return false;
        }
        for (int c = 0; c < 3; ++c)
            for (int j = 0; j < 8; ++j)
                if (!(g->at(c, j) == expected[c][j])) {
                    d = "cell (" + std::to_string(c) + "," + std::to_string(j) + ") = " +
                        g->at(c, j).to_string();
                    return false;
                }
        const double ms = median_ms(
            [&] { auto tmp = build_dp_w(inst.xs, inst.params, inst.zc->hi); }, 9);
        std::ostringstream os;
        os << "build " << ms << " ms";
        d = os.str();
        return ms < 1.0;
    });

    criterion(2, "six-variable bi-objective: min count 2 at weight 6, min weight 4 at count 3",
              [](std::string& d) {
        auto inst = make(fixtures::example1(), Variant::Weighted, 0, 3, 0, {2, 3},
                         IntInterval{0, 6});
        auto g = build_dp_w(inst.xs, inst.params, inst.zc->hi);
        if (!g) return false;
        const int n = inst.n();
        int min_q = dp_inf, weight_at_min_q = dp_inf, min_weight_card3 = dp_inf;
        for (int c = 0; c < g->rows; ++c) {
            const DpCell& cell = g->at(c, n - 1);
            if (cell.dummy()) continue;
            min_q = std::min(min_q, cell.q);
        }
        for (int c = 0; c < g->rows; ++c) {
            const DpCell& cell = g->at(c, n - 1);
            if (cell.dummy()) continue;
            if (cell.q == min_q) weight_at_min_q = std::min(weight_at_min_q, g->num_penalizing + c);
            if (cell.q <= 3) min_weight_card3 = std::min(min_weight_card3, g->num_penalizing + c);
        }
        std::ostringstream os;
        os << "min count " << min_q << " at weight " << weight_at_min_q << ", min weight "
           << min_weight_card3;
        d = os.str();
        return min_q == 2 && weight_at_min_q == 6 && min_weight_card3 == 4;
    });

    criterion(3, "full filter prunes the witness the decomposition misses", [](std::string& d) {
        auto inst = make(fixtures::decomposition_witness(), Variant::Weighted, 0, 3, 0,
                         {2, 2}, IntInterval{0, 3});
        auto strong = bc_filter_w(inst);
        if (!strong || !(strong->xs[4] == IntInterval{0, 0})) {
            d = "bc_filter_w did not pin x4 to [0,0]";
            return false;
        }
        Network net = decompose_w(inst);
        if (!propagate_fixpoint(net)) {
            d = "decomposition wiped out";
            return false;
        }
        if (!(net.vars[4] == IntInterval{0, 1})) {
            d = "decomposition unexpectedly pruned x4";
            return false;
        }
        return true;
    });

    criterion(4, "30,000 seeded instances: filters equal the brute-force closure",
              [](std::string& d) {
        auto t0 = Clock::now();
        long long bad = 0;
        std::string first;
        for (const char* mix : {"springy", "focusw", "focuswh"}) {
            auto rep = fuzz::run(20260809, 10000, 8, mix, 2);
            bad += rep.mismatches;
            if (rep.first && first.empty())
                first = serialize_instance(rep.first->input) + rep.first->detail;
        }
        const double secs =
            std::chrono::duration<double>(Clock::now() - t0).count();
        std::ostringstream os;
        os << bad << " mismatches in " << secs << " s";
        if (!first.empty()) os << "\n" << first;
        d = os.str();
        return bad == 0 && secs < 300.0;
    });

    criterion(5, "table invariants hold across the corpus", [](std::string& d) {
        long long violations = 0, tables = 0;
        for (const char* mix : {"focusw", "focuswh"}) {
            for (long long t = 0; t < 10000; ++t) {
                SplitMix64 rng(20260809ull * 0x9e3779b97f4a7c15ull +
                               static_cast<std::uint64_t>(t) + 1);
                Variant v = fuzz::variant_for_trial(rng, mix);
                FocusInstance inst = fuzz::random_instance(rng, 8, v);
                const int n = inst.n();
                auto check_grid = [&](const auto& g) {
                    ++tables;
                    for (int j = 0; j < n; ++j) {
                        if (g.at(0, j).dummy()) ++violations;
                        bool seen_dummy = false;
                        for (int c = 0; c < g.rows; ++c) {
                            if (g.at(c, j).dummy()) {
                                seen_dummy = true;
                            } else if (seen_dummy) {
                                ++violations;
                            }
                        }
                        for (int c = 0; c + 1 < g.rows; ++c) {
                            const auto& a = g.at(c, j);
                            const auto& b = g.at(c + 1, j);
                            if (a.dummy() || b.dummy()) continue;
                            if (!(b.q < a.q || (b.q == a.q && b.l <= a.l))) ++violations;
                        }
                    }
                };
                if (inst.params.variant == Variant::Weighted) {
                    if (auto g = build_dp_w(inst.xs, inst.params, inst.zc->hi)) check_grid(*g);
                } else {
                    if (auto g = build_dp_wh(inst.xs, inst.params, inst.zc->hi)) check_grid(*g);
                }
            }
        }
        std::ostringstream os;
        os << violations << " violations over " << tables << " tables";
        d = os.str();
        return violations == 0 && tables > 15000;
    });

    criterion(6, "one springy rental bridges the idle day a plain rental cannot",
              [](std::string& d) {
        auto springy = make(fixtures::fig1_practical(), Variant::Springy, 0, 4, 1, {1, 1});
        auto plain = make(fixtures::fig1_practical(), Variant::Focus, 0, 4, 0, {1, 1});
        const bool springy_ok = springy_filter(springy).has_value();
        const bool plain_ok = springy_filter(plain).has_value();
        d = std::string("springy ") + (springy_ok ? "feasible" : "infeasible") + ", plain " +
            (plain_ok ? "feasible" : "infeasible");
        return springy_ok && !plain_ok;
    });

    criterion(7, "springy filter scales linearly; table build scales with n*max(zc)",
              [](std::string& d) {
        FocusParams p{0, 6, 1, Variant::Springy};
        auto xs_small = periodic_xs(20000);
        auto xs_big = periodic_xs(200000);
        auto run_springy = [&](const std::vector<IntInterval>& xs, int reps) {
            FocusInstance inst;
            inst.xs = xs;
            inst.params = p;
            inst.yc = {0, static_cast<int>(xs.size())};
            for (int r = 0; r < reps; ++r) {
                auto out = springy_filter(inst);
                if (!out) std::abort();
            }
        };
        const double t_small = median_ms([&] { run_springy(xs_small, 10); }, 7) / 10.0;
        const double t_big = median_ms([&] { run_springy(xs_big, 1); }, 7);
        const double ratio_springy = t_big / t_small;

        std::vector<IntInterval> base(1500, {0, 1}), twice(3000, {0, 1});
        const double t_base = median_ms(
            [&] { auto g = build_dp_w(base, {0, 8, 0, Variant::Weighted}, 750); }, 7);
        const double t_twice = median_ms(
            [&] { auto g = build_dp_w(twice, {0, 8, 0, Variant::Weighted}, 1500); }, 7);
        const double ratio_dp = t_twice / t_base;

        std::ostringstream os;
        os << "springy x10 -> " << ratio_springy << " (want 8..12); dp x2,x2 -> " << ratio_dp
           << " (want 3.5..4.5)";
        d = os.str();
        return ratio_springy >= 8.0 && ratio_springy <= 12.0 && ratio_dp >= 3.5 &&
               ratio_dp <= 4.5;
    });

    criterion(8, "rentals frontier equals the oracle frontier for h in {0,1,2}",
              [](std::string& d) {
        std::vector<AmongSpec> amongs{{0, 4, 2, 3}, {3, 7, 1, 2}, {6, 8, 1, 1}};
        auto amongs_hold = [&](const std::vector<int>& vals) {
            for (const auto& a : amongs) {
                int cnt = 0;
                for (int i = a.s; i <= a.e; ++i)
                    if (vals[i] > 0) ++cnt;
                if (cnt < a.lo || cnt > a.hi) return false;
            }
            return true;
        };
        std::vector<std::vector<std::pair<int, int>>> fronts;
        for (int h : {0, 1, 2}) {
            auto inst = make(std::vector<IntInterval>(9, u()), Variant::WeightedSpringy, 0, 4,
                             h, {0, 9}, IntInterval{0, 9});
            auto got = pareto_rentals(inst, amongs);
            auto want = oracle::pareto_frontier(inst.xs, inst.params, amongs_hold);
            if (got != want) {
                std::ostringstream os;
                os << "h=" << h << " solver";
                for (auto& [y, z] : got) os << " (" << y << "," << z << ")";
                os << " oracle";
                for (auto& [y, z] : want) os << " (" << y << "," << z << ")";
                d = os.str();
                return false;
            }
            fronts.push_back(got);
        }
        if (fronts[0].empty()) {
            d = "instance unsatisfiable at h=0";
            return false;
        }
        if (!weakly_dominates(fronts[1], fronts[0])) {
            d = "h=1 frontier does not dominate h=0";
            return false;
        }
        std::ostringstream os;
        os << "frontier sizes";
        for (const auto& f : fronts) os << " " << f.size();
        d = os.str();
        return true;
    });

    criterion(9, "filters are idempotent and monotone across the corpus", [](std::string& d) {
        long long violations = 0, checked = 0;
        for (const char* mix : {"springy", "focusw", "focuswh"}) {
            for (long long t = 0; t < 10000; ++t) {
                SplitMix64 rng(20260809ull * 0x9e3779b97f4a7c15ull +
                               static_cast<std::uint64_t>(t) + 1);
                Variant v = fuzz::variant_for_trial(rng, mix);
                FocusInstance inst = fuzz::random_instance(rng, 8, v);
                auto filter = [&](const FocusInstance& i) {
                    if (i.params.variant == Variant::Weighted) return bc_filter_w(i);
                    if (i.params.variant == Variant::WeightedSpringy) return bc_filter_wh(i);
                    return springy_filter(i);
                };
                auto once = filter(inst);
                if (!once) continue;
                ++checked;
                auto twice = filter(*once);
                if (!twice || !(*twice == *once)) ++violations;

                FocusInstance tighter = inst;
                if (tighter.yc.hi > tighter.yc.lo) --tighter.yc.hi;
                SplitMix64 pick(static_cast<std::uint64_t>(t) * 7919 + 13);
                int i = static_cast<int>(pick.below(static_cast<std::uint32_t>(inst.n())));
                if (!tighter.xs[i].is_fixed()) {
                    if (pick.chance(1, 2)) tighter.xs[i].lo++;
                    else tighter.xs[i].hi--;
                }
                auto out = filter(tighter);
                if (out) {
                    for (int j = 0; j < inst.n(); ++j)
                        if (out->xs[j].lo < once->xs[j].lo || out->xs[j].hi > once->xs[j].hi)
                            ++violations;
                    if (out->yc.lo < once->yc.lo) ++violations;
                    if (inst.zc && out->zc->lo < once->zc->lo) ++violations;
                }
            }
        }
        std::ostringstream os;
        os << violations << " violations over " << checked << " feasible instances";
        d = os.str();
        return violations == 0 && checked > 10000;
    });

    std::printf("%s: %d criterion(s) failed\n", failures ? "RESULT FAIL" : "RESULT PASS",
                failures);
    return failures;
}
