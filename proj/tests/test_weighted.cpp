#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "focus/fuzz.hpp"
#include "focus/oracle.hpp"
#include "focus/rng.hpp"
#include "focus/weighted.hpp"

#include "dp_oracle.hpp"
#include "fixtures.hpp"

using namespace focus;
using fixtures::make;
using fixtures::off;
using fixtures::on;
using fixtures::u;

namespace {

std::vector<IntInterval> random_xs(SplitMix64& rng, int n) {
    std::vector<IntInterval> xs;
    for (int i = 0; i < n; ++i)
        xs.push_back(rng.chance(1, 3) ? u() : (rng.chance(1, 2) ? on() : off()));
    return xs;
}

std::vector<VarLabel> labels_of(const std::vector<IntInterval>& xs, int k) {
    std::vector<VarLabel> labs;
    for (const auto& x : xs) labs.push_back(label(x, k));
    return labs;
}

} // namespace

TEST_CASE("table matches the worked eight-variable execution cell for cell") {
    auto inst = make(fixtures::example2(), Variant::Weighted, 0, 5, 0, {2, 2},
                     IntInterval{7, 7});
    auto g = build_dp_w(inst.xs, inst.params, inst.zc->hi);
    REQUIRE(g);
    CHECK(g->num_penalizing == 5);
    CHECK(g->zcu == 2);
    REQUIRE(g->rows == 3);

    const DpCell expected[3][8] = {
        {{1, 1}, {1, dp_inf}, {2, 1}, {2, 2}, {2, dp_inf}, {3, 1}, {3, dp_inf}, {4, 1}},
        {{}, {1, 2}, {1, 3}, {1, 4}, {1, dp_inf}, {2, 1}, {2, dp_inf}, {3, 1}},
        {{}, {}, {}, {}, {1, 5}, {2, 1}, {2, 2}, {2, 3}},
    };
    for (int c = 0; c < 3; ++c)
        for (int j = 0; j < 8; ++j) {
            CAPTURE(c, j);
            CHECK(g->at(c, j) == expected[c][j]);
        }
}

TEST_CASE("all-neutral table is a flat first row") {
    std::vector<IntInterval> xs(5, off());
    auto g = build_dp_w(xs, {0, 3, 0, Variant::Weighted}, 4);
    REQUIRE(g);
    for (int j = 0; j < 5; ++j) {
        CHECK(g->at(0, j) == DpCell{0, dp_inf});
        for (int c = 1; c < g->rows; ++c) CHECK(g->at(c, j).dummy());
    }
}

TEST_CASE("example-1 trade-off between count and weight") {
    auto inst = make(fixtures::example1(), Variant::Weighted, 0, 3, 0, {2, 3},
                     IntInterval{0, 6});
    auto g = build_dp_w(inst.xs, inst.params, inst.zc->hi);
    REQUIRE(g);
    const int n = inst.n();
    int min_q = dp_inf;
    for (int c = 0; c < g->rows; ++c)
        if (!g->at(c, n - 1).dummy()) min_q = std::min(min_q, g->at(c, n - 1).q);
    CHECK(min_q == 2);
    int weight_at_min_q = dp_inf;
    for (int c = 0; c < g->rows; ++c)
        if (g->at(c, n - 1).q == min_q)
            weight_at_min_q = std::min(weight_at_min_q, g->num_penalizing + c);
    CHECK(weight_at_min_q == 6);
    int min_weight_card3 = dp_inf;
    for (int c = 0; c < g->rows; ++c)
        if (g->at(c, n - 1).q <= 3)
            min_weight_card3 = std::min(min_weight_card3, g->num_penalizing + c);
    CHECK(min_weight_card3 == 4);
}

TEST_CASE("disentailment on the worked example") {
    auto inst = make(fixtures::example2(), Variant::Weighted, 0, 5, 0, {2, 2},
                     IntInterval{7, 7});
    CHECK(disentailment_w(inst) == Feasibility::Feasible);

    auto tight = inst;
    tight.yc = {1, 1};
    CHECK(disentailment_w(tight) == Feasibility::Disentailed);

    auto empty_cover = make({off(), off()}, Variant::Weighted, 0, 2, 0, {0, 2},
                            IntInterval{0, 2});
    CHECK(disentailment_w(empty_cover) == Feasibility::Feasible);

    // Budget below the penalizing count disentails immediately.
    auto starved = make({on(), on()}, Variant::Weighted, 0, 2, 0, {1, 1}, IntInterval{0, 1});
    CHECK(disentailment_w(starved) == Feasibility::Disentailed);
}

TEST_CASE("cells carry exact costs and minimal covers") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = rng.range(1, 7);
        auto xs = random_xs(rng, n);
        FocusParams p{0, rng.range(1, n), 0, Variant::Weighted};
        const int zc_hi = rng.range(0, n + 2);
        auto g = build_dp_w(xs, p, zc_hi);
        if (!g) {
            CHECK(count_penalizing(xs, 0) > zc_hi);
            continue;
        }
        auto labs = labels_of(xs, 0);
        for (int j = 0; j < n; ++j) {
            auto truth = dp_oracle::weighted_prefix_truth(labs, j, p.len, g->rows - 1);
            for (int c = 0; c < g->rows; ++c) {
                CAPTURE(trial, n, p.len, zc_hi, c, j);
                const DpCell& cell = g->at(c, j);
                CHECK(cell.dummy() == !truth[c].exists);
                if (!cell.dummy()) {
                    CHECK(cell.q == truth[c].q);
                    CHECK(cell.l == truth[c].l);
                }
            }
        }
    }
}

TEST_CASE("weight decomposes into cost plus penalizing count") {
    SplitMix64 rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.range(1, 7);
        std::vector<int> vals;
        std::vector<IntInterval> xs;
        for (int i = 0; i < n; ++i) {
            vals.push_back(rng.range(0, 1));
            xs.push_back(IntInterval::fixed(vals.back()));
        }
        FocusParams p{0, rng.range(1, n), 0, Variant::Weighted};
        const int pen = count_penalizing(xs, 0);
        for (const auto& [q, w] : oracle::best_covers(vals, p)) {
            // Fixed instance: every covered variable is penalizing.
            CHECK(w == pen);
        }
    }
}

TEST_CASE("structural invariants: first row, consecutive rows, monotone columns") {
    SplitMix64 rng(33);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.range(1, 8);
        auto xs = random_xs(rng, n);
        FocusParams p{0, rng.range(1, n), 0, Variant::Weighted};
        auto g = build_dp_w(xs, p, rng.range(0, n + 3));
        if (!g) continue;
        for (int j = 0; j < n; ++j) {
            CHECK_FALSE(g->at(0, j).dummy());
            bool seen_dummy = false;
            for (int c = 0; c < g->rows; ++c) {
                if (g->at(c, j).dummy()) seen_dummy = true;
                else CHECK_FALSE(seen_dummy); // non-dummies consecutive from cost 0
            }
            for (int c = 0; c + 1 < g->rows; ++c) {
                const DpCell& a = g->at(c, j);
                const DpCell& b = g->at(c + 1, j);
                if (a.dummy() || b.dummy()) continue;
                const bool le = b.q < a.q || (b.q == a.q && b.l <= a.l);
                CHECK(le);
            }
        }
    }
}

TEST_CASE("filter prunes the decomposition witness to its only support") {
    auto inst = make(fixtures::decomposition_witness(), Variant::Weighted, 0, 3, 0, {2, 2},
                     IntInterval{0, 3});
    auto out = bc_filter_w(inst);
    REQUIRE(out);
    CHECK(out->xs[4] == IntInterval{0, 0});
    CHECK(out->xs[1] == u());
    CHECK(out->zc == IntInterval{2, 3});
}

TEST_CASE("filter fixes the worked example and is identity on solved instances") {
    auto inst = make(fixtures::example2(), Variant::Weighted, 0, 5, 0, {2, 2},
                     IntInterval{7, 7});
    auto out = bc_filter_w(inst);
    REQUIRE(out);
    CHECK(out->xs[1] == on());
    CHECK(out->xs[4] == off());
    CHECK(out->xs[6] == on());
    auto again = bc_filter_w(*out);
    REQUIRE(again);
    CHECK(*again == *out);

    auto solved = make({on(), off(), on()}, Variant::Weighted, 0, 2, 0, {2, 2},
                       IntInterval{2, 4});
    auto kept = bc_filter_w(solved);
    REQUIRE(kept);
    CHECK(kept->xs == solved.xs);
}

TEST_CASE("shortcut fires only when no pruning is possible") {
    SplitMix64 rng(34);
    int fired = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = rng.range(1, 7);
        auto xs = random_xs(rng, n);
        FocusParams p{0, rng.range(1, n), 0, Variant::Weighted};
        FocusInstance inst;
        inst.xs = xs;
        inst.params = p;
        inst.yc = {0, rng.range(0, 4)};
        inst.zc = IntInterval{0, rng.range(0, n + 2)};

        auto g = build_dp_w(xs, p, inst.zc->hi);
        if (!g) continue;
        bool shortcut = false;
        for (int c = 0; c < g->rows && !shortcut; ++c)
            if (c < g->zcu && g->at(c, n - 1).q < inst.yc.hi) shortcut = true;
        if (!shortcut) continue;
        ++fired;
        auto closed = oracle::bc_closure(inst);
        REQUIRE(closed);
        CHECK(closed->xs == inst.xs); // X untouched whenever the shortcut holds
    }
    CHECK(fired > 20);
}

TEST_CASE("weighted filter equals the brute-force closure") {
    auto rep = fuzz::run(2001, 1500, 8, "focusw", 2);
    if (rep.first) {
        INFO(serialize_instance(rep.first->input) << rep.first->detail);
    }
    CHECK(rep.mismatches == 0);
}

TEST_CASE("table dump lists non-dummy cells in table layout") {
    auto inst = make(fixtures::example2(), Variant::Weighted, 0, 5, 0, {2, 2},
                     IntInterval{7, 7});
    auto g = build_dp_w(inst.xs, inst.params, inst.zc->hi);
    std::ostringstream os;
    dump_dp(*g, inst.xs, os);
    const std::string s = os.str();
    CHECK(s.find("{4,1}") != std::string::npos);
    CHECK(s.find("{1,inf}") != std::string::npos);
    CHECK(s.find("{1,5}") != std::string::npos);
    CHECK(s.find("{2,3}") != std::string::npos);
}
