#ifndef FOCUS_WEIGHTED_HPP
#define FOCUS_WEIGHTED_HPP

#include <algorithm>
#include <cassert>
#include <optional>
#include <vector>

#include "focus/dp.hpp"
#include "focus/instance.hpp"

// Weighted FOCUS: besides the sequence count yc, the total covered length is
// capped by zc. Feasibility and filtering run on cost-indexed DP tables where
// the cost of a cover is the number of covered undetermined variables; the
// total length is then cost + |penalizing|.

namespace focus {

inline int count_penalizing(const std::vector<IntInterval>& xs, int k) {
    int c = 0;
    for (const auto& x : xs)
        if (label(x, k) == VarLabel::Penalizing) ++c;
    return c;
}

/// Builds the cost/prefix table. Row c column j holds the least cardinality of
/// a cover of the prefix up to j with cost exactly c, plus the length of its
/// last sequence as tie-break state. Returns nothing when the cost budget
/// max(zc) - |penalizing| is already negative.
inline std::optional<DpGrid<DpCell>> build_dp_w(const std::vector<IntInterval>& xs,
                                                const FocusParams& p, int zc_hi,
                                                bool backward = false) {
    const int n = static_cast<int>(xs.size());
    const int len = p.len;
    DpGrid<DpCell> g;
    g.n = n;
    g.backward = backward;
    g.num_penalizing = count_penalizing(xs, p.k);
    g.zcu = static_cast<long long>(zc_hi) - g.num_penalizing;
    if (g.zcu < 0) return std::nullopt;
    g.rows = static_cast<int>(std::min<long long>(g.zcu, n)) + 1;
    g.cells.assign(static_cast<size_t>(g.rows) * n, DpCell{});

    auto var = [&](int j) -> const IntInterval& { return backward ? xs[n - 1 - j] : xs[j]; };

    for (int j = 0; j < n; ++j) {
        const VarLabel lab = label(var(j), p.k);
        for (int c = 0; c < g.rows; ++c) {
            const DpCell& prev = g.at(c, j - 1);
            DpCell out;
            switch (lab) {
                case VarLabel::Penalizing:
                    // Cost unchanged: extend the last sequence, else start a
                    // new one.
                    if (prev.l >= 1 && prev.l < len)
                        out = {prev.q, prev.l + 1};
                    else if (!prev.dummy())
                        out = {prev.q + 1, 1};
                    break;
                case VarLabel::Undetermined: {
                    // Either pay one cost to cover it (extending the last
                    // sequence, never starting one on it), or leave it out and
                    // interrupt the last sequence.
                    const DpCell& diag = g.at(c - 1, j - 1);
                    if (diag.l >= 1 && diag.l < len && (prev.dummy() || diag.q == prev.q))
                        out = {diag.q, diag.l + 1};
                    else if (!prev.dummy())
                        out = {prev.q, dp_inf};
                    break;
                }
                case VarLabel::Neutral:
                    if (!prev.dummy()) out = {prev.q, dp_inf};
                    break;
            }
            g.slot(c, j) = out;
        }
    }
    g.finalize_tops();
    return g;
}

enum class Feasibility { Feasible, Disentailed };

/// Bounds disentailment: some cost within budget admits a cover whose
/// cardinality fits max(yc).
inline Feasibility disentailment_w(const FocusInstance& inst) {
    assert(inst.params.variant == Variant::Weighted);
    auto g = build_dp_w(inst.xs, inst.params, inst.zc->hi);
    if (!g) return Feasibility::Disentailed;
    for (int c = 0; c < g->rows; ++c)
        if (g->at(c, inst.n() - 1).q <= inst.yc.hi) return Feasibility::Feasible;
    return Feasibility::Disentailed;
}

/// Bounds-consistency filter for Weighted FOCUS. Tightens min(yc) and min(zc)
/// from the forward table, then checks per-variable supports by combining
/// forward and backward cells around each undetermined variable.
inline std::optional<FocusInstance> bc_filter_w(FocusInstance inst) {
    inst.validate();
    assert(inst.params.variant == Variant::Weighted);
    const int n = inst.n();
    const int k = inst.params.k;
    const int len = inst.params.len;

    for (;;) {
        auto fwd = build_dp_w(inst.xs, inst.params, inst.zc->hi);
        if (!fwd) return std::nullopt;
        const DpGrid<DpCell>& f = *fwd;
        const long long zcu = f.zcu;

        int min_q = dp_inf, min_c_within_yc = dp_inf;
        for (int c = 0; c < f.rows; ++c) {
            const DpCell& cell = f.at(c, n - 1);
            if (cell.dummy()) continue;
            min_q = std::min(min_q, cell.q);
            if (cell.q <= inst.yc.hi) min_c_within_yc = std::min(min_c_within_yc, c);
        }
        if (min_q > inst.yc.hi) return std::nullopt;
        inst.yc.lo = std::max(inst.yc.lo, min_q);
        if (inst.yc.is_empty()) return std::nullopt;
        inst.zc->lo = std::max(inst.zc->lo, f.num_penalizing + min_c_within_yc);
        if (inst.zc->is_empty()) return std::nullopt;

        // Changing one variable's value moves cost and cardinality by at most
        // one, so strict slack in both means every value has a support.
        bool bc_already = false;
        for (int c = 0; c < f.rows && !bc_already; ++c)
            if (c < zcu && f.at(c, n - 1).q < inst.yc.hi) bc_already = true;

        bool changed = false;
        if (!bc_already) {
            auto bwd = build_dp_w(inst.xs, inst.params, inst.zc->hi, /*backward=*/true);
            const DpGrid<DpCell>& b = *bwd;

            for (int i = 0; i < n; ++i) {
                if (label(inst.xs[i], k) != VarLabel::Undetermined) continue;
                const int fcol = i - 1, bcol = n - i - 2;
                bool low_ok = false, high_ok = false;
                const int c1_max = std::min<long long>(f.rows - 1, zcu);
                for (int c1 = 0; c1 <= c1_max && !(low_ok && high_ok); ++c1) {
                    const DpCell& a = f.at(c1, fcol);
                    if (a.dummy()) continue;
                    // Larger suffix cost never hurts: take the biggest that
                    // fits the remaining budget.
                    const int c2_low =
                        static_cast<int>(std::min<long long>(zcu - c1, b.top(bcol)));
                    if (!low_ok && c2_low >= 0) {
                        const DpCell& s = b.at(c2_low, bcol);
                        if (!s.dummy() && a.q + s.q <= inst.yc.hi) low_ok = true;
                    }
                    const int c2_high =
                        static_cast<int>(std::min<long long>(zcu - c1 - 1, b.top(bcol)));
                    if (!high_ok && c2_high >= 0) {
                        const DpCell& s = b.at(c2_high, bcol);
                        if (!s.dummy() &&
                            detail::high_support_count(a.q, a.l, 0, s.q, s.l, 0, len,
                                                       dp_inf) <= inst.yc.hi)
                            high_ok = true;
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
