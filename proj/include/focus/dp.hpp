#ifndef FOCUS_DP_HPP
#define FOCUS_DP_HPP

#include <algorithm>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "focus/instance.hpp"

// Cost-indexed dynamic-programming tables shared by the weighted variants.
// Rows are exact costs (covered variables beyond the penalizing ones),
// columns are sequence prefixes. A dummy cell means no cover of that prefix
// has that exact cost.

namespace focus {

constexpr int dp_inf = std::numeric_limits<int>::max() / 2;

inline std::string dp_num(int v) { return v >= dp_inf ? "inf" : std::to_string(v); }

/// Cover summary for one (cost, prefix) cell: cardinality and length of the
/// last sequence (dp_inf when the last sequence does not touch the column).
struct DpCell {
    int q = dp_inf;
    int l = dp_inf;

    bool dummy() const { return q >= dp_inf; }
    std::string to_string() const { return "{" + dp_num(q) + "," + dp_num(l) + "}"; }
    friend bool operator==(const DpCell&, const DpCell&) = default;
};

/// Same plus the number of neutral variables covered by the last sequence.
struct DpCell3 {
    int q = dp_inf;
    int l = dp_inf;
    int hc = dp_inf;

    bool dummy() const { return q >= dp_inf; }
    std::string to_string() const {
        return "{" + dp_num(q) + "," + dp_num(l) + "," + dp_num(hc) + "}";
    }
    friend bool operator==(const DpCell3&, const DpCell3&) = default;
};

template <typename Cell>
struct DpGrid {
    int n = 0;
    int rows = 0;           // stored cost rows [0, rows); higher costs are unreachable
    long long zcu = 0;      // cost budget max(zc) - |penalizing|
    int num_penalizing = 0;
    bool backward = false;  // built over the reversed sequence
    std::vector<Cell> cells;
    std::vector<int> col_top; // highest non-dummy cost per column

    /// Cell access with the virtual column -1 ({0,..} at cost 0) and dummy
    /// padding outside the stored rows.
    const Cell& at(int c, int j) const {
        static const Cell dummy{};
        static const Cell origin = [] {
            Cell o{};
            o.q = 0;
            o.l = 0;
            if constexpr (requires(Cell x) { x.hc; }) o.hc = 0;
            return o;
        }();
        if (j < 0) return c == 0 ? origin : dummy;
        if (c < 0 || c >= rows) return dummy;
        return cells[static_cast<size_t>(c) * n + j];
    }

    int top(int j) const { return j < 0 ? 0 : col_top[j]; }

    Cell& slot(int c, int j) { return cells[static_cast<size_t>(c) * n + j]; }

    void finalize_tops() {
        col_top.assign(n, -1);
        for (int j = 0; j < n; ++j)
            for (int c = rows - 1; c >= 0; --c)
                if (!at(c, j).dummy()) {
                    col_top[j] = c;
                    break;
                }
    }
};

namespace detail {

inline int sat_add1(int v) { return v >= dp_inf ? dp_inf : v + 1; }

/// Cheapest cardinality that covers the probed variable with a high value,
/// combining a prefix cell and a suffix cell. The covering sequence can be a
/// fresh singleton, extend either side's last sequence, or glue both into one.
/// low_budget limits the low values of a glued sequence (pass dp_inf when the
/// variant has no such budget).
inline int high_support_count(int q1, int l1, int hc1, int q2, int l2, int hc2, int len,
                              int low_budget) {
    int best = sat_add1(q1 >= dp_inf || q2 >= dp_inf ? dp_inf : q1 + q2); // singleton
    if (q1 < dp_inf && q2 < dp_inf) {
        if (l1 >= 1 && l1 < len) best = std::min(best, q1 + q2); // extend prefix side
        if (l2 >= 1 && l2 < len) best = std::min(best, q1 + q2); // extend suffix side
        if (l1 >= 1 && l1 < dp_inf && l2 >= 1 && l2 < dp_inf && l1 + l2 + 1 <= len &&
            (hc1 >= dp_inf ? false : hc1 + hc2 <= low_budget))
            best = std::min(best, q1 + q2 - 1); // glue across the probe
    }
    return best;
}

} // namespace detail

/// Aligned text dump in the usual cost-by-variable layout; dummies print blank.
template <typename Cell>
inline void dump_dp(const DpGrid<Cell>& grid, const std::vector<IntInterval>& xs,
                    std::ostream& os) {
    const int n = grid.n;
    std::vector<std::vector<std::string>> txt(grid.rows + 1, std::vector<std::string>(n + 1));
    txt[0][0] = "c";
    for (int j = 0; j < n; ++j) {
        std::ostringstream hdr;
        hdr << "D(x" << j << ")=" << xs[j];
        txt[0][j + 1] = hdr.str();
    }
    for (int c = 0; c < grid.rows; ++c) {
        txt[c + 1][0] = std::to_string(c);
        for (int j = 0; j < n; ++j) {
            const Cell& cell = grid.at(c, j);
            txt[c + 1][j + 1] = cell.dummy() ? "" : cell.to_string();
        }
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

} // namespace focus

#endif
