#ifndef FOCUS_SPRINGY_HPP
#define FOCUS_SPRINGY_HPP

#include <algorithm>
#include <cassert>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "focus/instance.hpp"

// Linear-time bounds consistency for FOCUS and SpringyFocus. One pass builds
// per-prefix sequence-count minima, a second pass does the same over the
// reversed sequence, and a combine step decides per variable whether each
// value class still has a support within max(yc).

namespace focus {

/// Per-index summary of the cheapest covers of the prefix ending here.
/// Counts use n+1 as the "impossible" sentinel.
struct PrefixCell {
    int p_leq;  // fewest sequences with x_l low and outside every sequence
    int ps_leq; // fewest sequences with x_l low but inside the still-open sequence
    int p_gt;   // fewest sequences with x_l high (hence covered)
    int plen;   // length of the open sequence in the canonical covered optimum, 0 if none
    int card;   // low values inside that sequence, counted as if x_l were high
};

struct PrefixTable {
    std::vector<PrefixCell> cells;
    int sentinel = 0;      // n + 1
    bool backward = false; // built over the reversed sequence

    const PrefixCell& operator[](int i) const { return cells[i]; }
    int n() const { return static_cast<int>(cells.size()); }
};

/// Builds the prefix table in one left-to-right pass; each cell depends only
/// on its predecessor.
inline PrefixTable min_cards(const std::vector<IntInterval>& xs, const FocusParams& p,
                             bool backward = false) {
    const int n = static_cast<int>(xs.size());
    const int none = n + 1;
    const int k = p.k, len = p.len, h = p.h;
    PrefixTable t;
    t.sentinel = none;
    t.backward = backward;
    t.cells.resize(n);

    auto var = [&](int l) -> const IntInterval& { return backward ? xs[n - 1 - l] : xs[l]; };
    auto bump = [&](int v) { return v >= none ? none : v + 1; };

    {
        const bool can_low = var(0).lo <= k;
        const bool can_high = var(0).hi > k;
        t.cells[0] = {can_low ? 0 : none, none, can_high ? 1 : none, can_high ? 1 : 0, 0};
    }
    for (int l = 1; l < n; ++l) {
        const PrefixCell& q = t.cells[l - 1];
        PrefixCell c;
        const bool can_low = var(l).lo <= k;
        const bool can_high = var(l).hi > k;

        // Low and uncovered: the previous position must not leave a sequence
        // dangling on a low value.
        c.p_leq = can_low ? std::min(q.p_leq, q.p_gt) : none;

        // Low but covered: the open sequence absorbs one more low value. It
        // must exist, keep room to end on a later high value, and stay within
        // the per-sequence low budget.
        const bool blocked =
            q.plen == 0 || q.plen == len - 1 || q.plen == len || q.card == h;
        c.ps_leq = (can_low && !blocked) ? std::min(q.ps_leq, q.p_gt) : none;

        // High: extend the open sequence or start a fresh one.
        if (!can_high)
            c.p_gt = none;
        else if (q.plen == 0 || q.plen == len)
            c.p_gt = std::min(bump(q.p_gt), bump(q.p_leq));
        else
            c.p_gt = std::min({q.p_gt, q.ps_leq, bump(q.p_leq)});

        // Canonical open-sequence summary: extend only when strictly cheaper
        // than closing and restarting, so ties resolve to the shortest open
        // sequence.
        if (std::min(q.ps_leq, q.p_gt) < bump(q.p_leq) && q.plen < len)
            c.plen = q.plen + 1;
        else if (c.p_gt < none)
            c.plen = 1;
        else
            c.plen = 0;

        if (c.plen == 1)
            c.card = 0;
        else if (c.p_gt == none)
            c.card = std::min(q.card + 1, h); // beyond h the open state is dead anyway
        else
            c.card = q.card;

        t.cells[l] = c;
    }
    return t;
}

/// Least possible number of disjoint sequences over all bound instantiations.
/// Returns the sentinel n+1 when no instantiation admits a valid cover.
inline int focus_cardinality(const PrefixTable& t) {
    const PrefixCell& last = t.cells.back();
    return std::min(last.p_leq, last.p_gt);
}

/// Aligned text dump of the prefix quantities, one column per variable.
inline void dump_prefix(const PrefixTable& t, const std::vector<IntInterval>& xs,
                        std::ostream& os) {
    const int n = t.n();
    auto num = [&](int v) { return v >= t.sentinel ? std::string("-") : std::to_string(v); };
    const char* row_name[5] = {"p_leq", "ps_leq", "p_gt", "plen", "card"};
    std::vector<std::vector<std::string>> txt(6, std::vector<std::string>(n + 1));
    for (int j = 0; j < n; ++j) {
        std::ostringstream hdr;
        hdr << "D(x" << j << ")=" << xs[j];
        txt[0][j + 1] = hdr.str();
    }
    for (int r = 0; r < 5; ++r) txt[r + 1][0] = row_name[r];
    for (int j = 0; j < n; ++j) {
        const PrefixCell& c = t.cells[j];
        txt[1][j + 1] = num(c.p_leq);
        txt[2][j + 1] = num(c.ps_leq);
        txt[3][j + 1] = num(c.p_gt);
        txt[4][j + 1] = std::to_string(c.plen);
        txt[5][j + 1] = std::to_string(c.card);
    }
    std::vector<size_t> width(n + 1, 0);
    for (const auto& row : txt)
        for (int j = 0; j <= n; ++j) width[j] = std::max(width[j], row[j].size());
    for (const auto& row : txt) {
        for (int j = 0; j <= n; ++j)
            os << std::setw(static_cast<int>(width[j]) + 2) << row[j];
        os << "\n";
    }
}

struct SpringyOptions {
    // Mirror of the published pseudocode's guard: only prune X when yc is
    // fixed. Off by default; the general filter prunes unconditionally.
    bool fixed_yc_guard = false;
};

/// Bounds-consistency filter for Focus/Springy. Raises min(yc) to the focus
/// cardinality and removes a value class from x_l when every completion using
/// it needs more sequences than max(yc). Runs to its own fixpoint.
inline std::optional<FocusInstance> springy_filter(FocusInstance inst,
                                                   SpringyOptions opts = {}) {
    inst.validate();
    assert(!is_weighted(inst.params.variant));
    const int n = inst.n();
    const int k = inst.params.k;
    const int len = inst.params.len;
    const int h = inst.params.h;

    for (;;) {
        PrefixTable pre = min_cards(inst.xs, inst.params);
        const int fc = focus_cardinality(pre);
        if (fc > inst.yc.hi) return std::nullopt;
        inst.yc.lo = std::max(inst.yc.lo, fc);

        if (opts.fixed_yc_guard && !inst.yc.is_fixed()) return inst;

        PrefixTable suf = min_cards(inst.xs, inst.params, /*backward=*/true);
        const int cap = inst.yc.hi;
        bool changed = false;

        for (int l = 0; l < n; ++l) {
            const PrefixCell& f = pre.cells[l];
            const PrefixCell& b = suf.cells[n - 1 - l];
            IntInterval d = inst.xs[l];

            if (d.lo <= k) {
                // Uncovered low support, else the two open sequences glue
                // across x_l into a single one.
                bool low_ok = f.p_leq + b.p_leq <= cap;
                if (!low_ok) {
                    int add = (f.p_gt <= f.ps_leq ? 1 : 0) + (b.p_gt <= b.ps_leq ? 1 : 0);
                    const bool glue = f.plen + b.plen - 1 <= len &&
                                      f.card + b.card + add - 1 <= h;
                    low_ok = f.ps_leq + b.ps_leq - (glue ? 1 : 0) <= cap;
                }
                if (!low_ok) d = d.above(k);
            }
            if (d.hi > k) {
                // High: the covering sequence always spans both table sides.
                const bool glue = f.plen + b.plen - 1 <= len && f.card + b.card - 1 <= h;
                if (f.p_gt + b.p_gt - (glue ? 1 : 0) > cap) d = d.at_most(k);
            }
            if (d.is_empty()) return std::nullopt;
            if (d != inst.xs[l]) {
                inst.xs[l] = d;
                changed = true;
            }
        }
        if (!changed) return inst;
    }
}

} // namespace focus

#endif
