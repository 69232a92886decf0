#ifndef FOCUS_WEIGHTED_SPRINGY_HPP
#define FOCUS_WEIGHTED_SPRINGY_HPP

#include <algorithm>
#include <cassert>
#include <optional>
#include <vector>

#include "focus/dp.hpp"
#include "focus/instance.hpp"
#include "focus/weighted.hpp"

// Weighted Springy FOCUS: sequences may absorb up to h low values each, and
// the total covered length is capped by zc. Cost now counts covered
// undetermined and neutral variables, so the triple-valued cells also track
// how many neutral variables the last sequence absorbed.

namespace focus {

/// Triple-cell table build. Covering a neutral variable costs one budget unit
/// and one unit of the last sequence's low allowance; covering an
/// undetermined variable costs budget only, since its value can be set high.
inline std::optional<DpGrid<DpCell3>> build_dp_wh(const std::vector<IntInterval>& xs,
                                                  const FocusParams& p, int zc_hi,
                                                  bool backward = false) {
    const int n = static_cast<int>(xs.size());
    const int len = p.len, h = p.h;
    DpGrid<DpCell3> g;
    g.n = n;
    g.backward = backward;
    g.num_penalizing = count_penalizing(xs, p.k);
    g.zcu = static_cast<long long>(zc_hi) - g.num_penalizing;
    if (g.zcu < 0) return std::nullopt;
    g.rows = static_cast<int>(std::min<long long>(g.zcu, n)) + 1;
    g.cells.assign(static_cast<size_t>(g.rows) * n, DpCell3{});

    auto var = [&](int j) -> const IntInterval& { return backward ? xs[n - 1 - j] : xs[j]; };

    for (int j = 0; j < n; ++j) {
        const VarLabel lab = label(var(j), p.k);
        for (int c = 0; c < g.rows; ++c) {
            const DpCell3& prev = g.at(c, j - 1);
            DpCell3 out;
            switch (lab) {
                case VarLabel::Penalizing:
                    if (prev.l >= 1 && prev.l < len)
                        out = {prev.q, prev.l + 1, prev.hc};
                    else if (!prev.dummy())
                        out = {prev.q + 1, 1, 0};
                    break;
                case VarLabel::Undetermined: {
                    const DpCell3& diag = g.at(c - 1, j - 1);
                    if (diag.l >= 1 && diag.l < len && (prev.dummy() || diag.q == prev.q))
                        out = {diag.q, diag.l + 1, diag.hc};
                    else if (!prev.dummy())
                        out = {prev.q, dp_inf, dp_inf};
                    break;
                }
                case VarLabel::Neutral: {
                    // A sequence can run across a neutral variable but never
                    // start or end on it; absorbing one uses low allowance.
                    const DpCell3& diag = g.at(c - 1, j - 1);
                    if (diag.l >= 1 && diag.l < len && diag.hc < h &&
                        (prev.dummy() || diag.q == prev.q))
                        out = {diag.q, diag.l + 1, diag.hc + 1};
                    else if (!prev.dummy())
                        out = {prev.q, dp_inf, dp_inf};
                    break;
                }
            }
            g.slot(c, j) = out;
        }
    }
    g.finalize_tops();
    return g;
}

inline Feasibility disentailment_wh(const FocusInstance& inst) {
    assert(inst.params.variant == Variant::WeightedSpringy);
    auto g = build_dp_wh(inst.xs, inst.params, inst.zc->hi);
    if (!g) return Feasibility::Disentailed;
    for (int c = 0; c < g->rows; ++c)
        if (g->at(c, inst.n() - 1).q <= inst.yc.hi) return Feasibility::Feasible;
    return Feasibility::Disentailed;
}

/// Bounds-consistency filter for Weighted Springy FOCUS. Mirrors the weighted
/// filter with two amendments: a glued high support must respect the combined
/// low allowance, and a low value can be supported covered, gluing both last
/// sequences across it at one budget unit and one allowance unit.
inline std::optional<FocusInstance> bc_filter_wh(FocusInstance inst) {
    inst.validate();
    assert(inst.params.variant == Variant::WeightedSpringy);
    const int n = inst.n();
    const int k = inst.params.k;
    const int len = inst.params.len;
    const int h = inst.params.h;

    for (;;) {
        auto fwd = build_dp_wh(inst.xs, inst.params, inst.zc->hi);
        if (!fwd) return std::nullopt;
        const DpGrid<DpCell3>& f = *fwd;
        const long long zcu = f.zcu;

        int min_q = dp_inf, min_c_within_yc = dp_inf;
        for (int c = 0; c < f.rows; ++c) {
            const DpCell3& cell = f.at(c, n - 1);
            if (cell.dummy()) continue;
            min_q = std::min(min_q, cell.q);
            if (cell.q <= inst.yc.hi) min_c_within_yc = std::min(min_c_within_yc, c);
        }
        if (min_q > inst.yc.hi) return std::nullopt;
        inst.yc.lo = std::max(inst.yc.lo, min_q);
        if (inst.yc.is_empty()) return std::nullopt;
        inst.zc->lo = std::max(inst.zc->lo, f.num_penalizing + min_c_within_yc);
        if (inst.zc->is_empty()) return std::nullopt;

        bool bc_already = false;
        for (int c = 0; c < f.rows && !bc_already; ++c)
            if (c < zcu && f.at(c, n - 1).q < inst.yc.hi) bc_already = true;

        bool changed = false;
        if (!bc_already) {
            auto bwd = build_dp_wh(inst.xs, inst.params, inst.zc->hi, /*backward=*/true);
            const DpGrid<DpCell3>& b = *bwd;

            for (int i = 0; i < n; ++i) {
                if (label(inst.xs[i], k) != VarLabel::Undetermined) continue;
                const int fcol = i - 1, bcol = n - i - 2;
                bool low_ok = false, high_ok = false;
                const int c1_max = std::min<long long>(f.rows - 1, zcu);
                for (int c1 = 0; c1 <= c1_max && !(low_ok && high_ok); ++c1) {
                    const DpCell3& a = f.at(c1, fcol);
                    if (a.dummy()) continue;
                    // Low and uncovered.
                    const int c2_u =
                        static_cast<int>(std::min<long long>(zcu - c1, b.top(bcol)));
                    if (!low_ok && c2_u >= 0) {
                        const DpCell3& s = b.at(c2_u, bcol);
                        if (!s.dummy() && a.q + s.q <= inst.yc.hi) low_ok = true;
                    }
                    // One budget unit pays for covering x_i itself, high or
                    // covered-low alike.
                    const int c2_c =
                        static_cast<int>(std::min<long long>(zcu - c1 - 1, b.top(bcol)));
                    if (c2_c >= 0) {
                        const DpCell3& s = b.at(c2_c, bcol);
                        if (!s.dummy()) {
                            if (!high_ok &&
                                detail::high_support_count(a.q, a.l, a.hc, s.q, s.l, s.hc,
                                                           len, h) <= inst.yc.hi)
                                high_ok = true;
                            // Low and covered: glue both last sequences across
                            // x_i, which counts as one absorbed low.
                            if (!low_ok && a.l >= 1 && a.l < dp_inf && s.l >= 1 &&
                                s.l < dp_inf && a.l + s.l + 1 <= len &&
                                a.hc + s.hc + 1 <= h && a.q + s.q - 1 <= inst.yc.hi)
                                low_ok = true;
                        }
                    }
                }
                IntInterval d = inst.xs[i];
                if (!low_ok) d = d.above(k);
                if (!high_ok) d = d.at_most(k);
                if (d.is_empty()) return std::nullopt;
                if (d != inst.xs[i]) {
                    inst.xs[i] = d;
                    changed = true;
                }
            }
        }
        if (!changed) return inst;
    }
}

} // namespace focus

#endif
