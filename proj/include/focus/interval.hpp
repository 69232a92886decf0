#ifndef FOCUS_INTERVAL_HPP
#define FOCUS_INTERVAL_HPP

#include <algorithm>
#include <cassert>
#include <ostream>

namespace focus {

/// Closed integer interval [lo, hi]. lo > hi encodes the empty domain.
struct IntInterval {
    int lo = 0;
    int hi = -1;

    static IntInterval empty() { return {0, -1}; }
    static IntInterval fixed(int v) { return {v, v}; }

    bool is_empty() const { return lo > hi; }
    bool is_fixed() const { return lo == hi; }
    bool contains(int v) const { return lo <= v && v <= hi; }
    long long size() const { return is_empty() ? 0 : static_cast<long long>(hi) - lo + 1; }

    // Bounds reasoning only ever raises lo or lowers hi.
    IntInterval with_min(int new_lo) const { return {std::max(lo, new_lo), hi}; }
    IntInterval with_max(int new_hi) const { return {lo, std::min(hi, new_hi)}; }

    /// Drop every value <= k (keep the high class).
    IntInterval above(int k) const { return with_min(k + 1); }
    /// Drop every value > k (keep the low class).
    IntInterval at_most(int k) const { return with_max(k); }

    friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const IntInterval& d) {
    if (d.is_empty()) return os << "[]";
    return os << "[" << d.lo << "," << d.hi << "]";
}

enum class VarLabel { Penalizing, Neutral, Undetermined };

/// Penalizing iff lo > k, Neutral iff hi <= k, Undetermined otherwise.
inline VarLabel label(const IntInterval& x, int k) {
    assert(!x.is_empty());
    if (x.lo > k) return VarLabel::Penalizing;
    if (x.hi <= k) return VarLabel::Neutral;
    return VarLabel::Undetermined;
}

inline std::ostream& operator<<(std::ostream& os, VarLabel l) {
    switch (l) {
        case VarLabel::Penalizing: return os << "P";
        case VarLabel::Neutral: return os << "N";
        case VarLabel::Undetermined: return os << "U";
    }
    return os;
}

} // namespace focus

#endif
