#ifndef FOCUS_INSTANCE_HPP
#define FOCUS_INSTANCE_HPP

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "focus/interval.hpp"

namespace focus {

enum class Variant { Focus, Springy, Weighted, WeightedSpringy };

inline bool is_weighted(Variant v) {
    return v == Variant::Weighted || v == Variant::WeightedSpringy;
}

/// Variants whose sequences may absorb up to h low values.
inline bool is_springy(Variant v) {
    return v == Variant::Springy || v == Variant::WeightedSpringy;
}

inline const char* variant_name(Variant v) {
    switch (v) {
        case Variant::Focus: return "focus";
        case Variant::Springy: return "springy";
        case Variant::Weighted: return "focusw";
        case Variant::WeightedSpringy: return "focuswh";
    }
    return "?";
}

struct FocusParams {
    int k = 0;       // threshold separating low from high values
    int len = 1;     // maximum sequence length
    int h = 0;       // tolerated low values per sequence (springy variants)
    Variant variant = Variant::Focus;
};

/// One constraint instance: the sequence X, the sequence-count variable yc,
/// and for the weighted variants the total-covered-length variable zc.
struct FocusInstance {
    std::vector<IntInterval> xs;
    IntInterval yc;
    std::optional<IntInterval> zc;
    FocusParams params;

    int n() const { return static_cast<int>(xs.size()); }

    void validate() const {
        if (xs.empty())
            throw std::invalid_argument("instance needs at least one sequence variable");
        for (const auto& x : xs)
            if (x.is_empty()) throw std::invalid_argument("empty variable domain");
        if (yc.is_empty()) throw std::invalid_argument("empty yc domain");
        if (params.len < 1 || params.len > n())
            throw std::invalid_argument("len must lie in [1, n]");
        if (is_springy(params.variant)) {
            if (params.h < 0 || params.h > params.len - 2)
                throw std::invalid_argument("h must lie in [0, len-2]");
        } else if (params.h != 0) {
            throw std::invalid_argument("h must be 0 for focus/focusw");
        }
        if (is_weighted(params.variant)) {
            if (!zc) throw std::invalid_argument("weighted variant needs zc");
            if (zc->is_empty()) throw std::invalid_argument("empty zc domain");
        } else if (zc) {
            throw std::invalid_argument("zc only applies to weighted variants");
        }
    }

    friend bool operator==(const FocusInstance& a, const FocusInstance& b) {
        return a.xs == b.xs && a.yc == b.yc && a.zc == b.zc &&
               a.params.k == b.params.k && a.params.len == b.params.len &&
               a.params.h == b.params.h && a.params.variant == b.params.variant;
    }
};

/// Witness object: index sequences (i, j), pairwise disjoint, sorted by start.
struct Cover {
    std::vector<std::pair<int, int>> seqs;

    int size() const { return static_cast<int>(seqs.size()); }
    int total_length() const {
        int w = 0;
        for (const auto& [i, j] : seqs) w += j - i + 1;
        return w;
    }
    bool covers(int l) const {
        for (const auto& [i, j] : seqs)
            if (i <= l && l <= j) return true;
        return false;
    }
};

struct CoverVerdict {
    bool valid = true;
    int failed_condition = 0; // 0 = structural defect, else definition condition number
    std::string reason;

    explicit operator bool() const { return valid; }
};

inline CoverVerdict cover_fail(int cond, std::string why) {
    return CoverVerdict{false, cond, std::move(why)};
}

/// Checks a witness cover against the variant's defining conditions for a full
/// assignment. Cardinality and weight are compared against the current upper
/// bounds of yc and zc. Reports the number of the first violated condition.
inline CoverVerdict cover_is_valid(const FocusInstance& inst,
                                   const std::vector<int>& assignment,
                                   const Cover& cover) {
    const int n = inst.n();
    const int k = inst.params.k;
    const Variant variant = inst.params.variant;
    if (static_cast<int>(assignment.size()) != n)
        throw std::invalid_argument("assignment size mismatch");
    for (int l = 0; l < n; ++l)
        if (!inst.xs[l].contains(assignment[l]))
            throw std::invalid_argument("assignment leaves a variable domain");

    // Structural checks on the cover object itself.
    int prev_end = -1;
    for (const auto& [i, j] : cover.seqs) {
        if (i < 0 || j >= n || i > j)
            return cover_fail(0, "sequence out of range");
        if (i <= prev_end)
            return cover_fail(0, "sequences not disjoint or not sorted by start");
        prev_end = j;
    }

    const bool springy = is_springy(variant);
    const bool weighted = is_weighted(variant);

    // Condition numbering follows each variant's definition.
    const int cond_card = 1;
    const int cond_cover = 2;
    const int cond_low_count = springy ? (weighted ? 3 : 4) : 0;
    const int cond_len = springy ? (weighted ? 4 : 3) : 3;
    const int cond_weight = weighted ? (springy ? 5 : 4) : 0;

    if (cover.size() > inst.yc.hi)
        return cover_fail(cond_card, "more sequences than max(yc)");

    for (int l = 0; l < n; ++l) {
        const bool high = assignment[l] > k;
        const bool covered = cover.covers(l);
        if (high && !covered)
            return cover_fail(cond_cover, "high value left uncovered");
        if (!springy && covered && !high)
            return cover_fail(cond_cover, "sequence covers a low value");
    }

    for (const auto& [i, j] : cover.seqs) {
        if (j - i + 1 > inst.params.len)
            return cover_fail(cond_len, "sequence longer than len");
        if (springy) {
            if (assignment[i] <= k || assignment[j] <= k)
                return cover_fail(cond_len, "sequence endpoint not above k");
            int lows = 0;
            for (int l = i; l <= j; ++l)
                if (assignment[l] <= k) ++lows;
            if (lows > inst.params.h)
                return cover_fail(cond_low_count, "too many low values inside a sequence");
        }
    }

    if (weighted && cover.total_length() > inst.zc->hi)
        return cover_fail(cond_weight, "total covered length exceeds max(zc)");

    return CoverVerdict{};
}

} // namespace focus

#endif
