#ifndef FOCUS_TESTS_FIXTURES_HPP
#define FOCUS_TESTS_FIXTURES_HPP

#include <optional>
#include <vector>

#include "focus/instance.hpp"

// Instances used across suites. u() is an undecided 0/1 day, on()/off() are
// fixed days; all thresholds are k = 0 unless a test says otherwise.

namespace fixtures {

using focus::FocusInstance;
using focus::IntInterval;
using focus::Variant;

inline IntInterval u() { return {0, 1}; }
inline IntInterval on() { return {1, 1}; }
inline IntInterval off() { return {0, 0}; }

inline FocusInstance make(std::vector<IntInterval> xs, Variant v, int k, int len, int h,
                          IntInterval yc, std::optional<IntInterval> zc = std::nullopt) {
    FocusInstance inst;
    inst.xs = std::move(xs);
    inst.params = {k, len, h, v};
    inst.yc = yc;
    inst.zc = zc;
    inst.validate();
    return inst;
}

/// Horizon of ten days; day 5 is overloaded under every start of the floating
/// activity, days 1..9 may be depending on where it starts.
inline std::vector<IntInterval> fig1_activity_anywhere() {
    return {off(), u(), u(), u(), u(), on(), u(), u(), u(), u()};
}

/// The practical schedule: the activity starts at day 3 and the extra machine
/// idles on day 4, leaving overloads exactly on days 3 and 5.
inline std::vector<IntInterval> fig1_practical() {
    return {off(), off(), off(), on(), off(), on(), off(), off(), off(), off()};
}

/// Six days, four fixed overloads, two open ones.
inline std::vector<IntInterval> example1() {
    return {on(), u(), on(), on(), u(), on()};
}

/// Eight days, five fixed overloads, three open ones.
inline std::vector<IntInterval> example2() {
    return {on(), u(), on(), on(), u(), on(), u(), on()};
}

/// The instance where the boolean-channel decomposition misses a prune.
inline std::vector<IntInterval> decomposition_witness() {
    return {on(), u(), on(), off(), u()};
}

} // namespace fixtures

#endif
