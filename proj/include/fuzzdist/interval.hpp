// Copyright 2026 The fuzzdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>

#include "fuzzdist/errors.hpp"

namespace fuzzdist {

/// Closed real interval [l, r].
struct Interval {
    double l = 0.0;
    double r = 0.0;

    Interval() = default;

    Interval(double l_, double r_) : l(l_), r(r_) {
        if (!std::isfinite(l) || !std::isfinite(r))
            throw InvalidSetError("interval endpoints must be finite");
        if (l > r) throw InvalidSetError("interval requires l <= r");
    }

    double width() const noexcept { return r - l; }

    bool contains(double x) const noexcept { return x >= l && x <= r; }
};

inline bool operator==(const Interval& a, const Interval& b) noexcept {
    return a.l == b.l && a.r == b.r;
}

inline std::ostream& operator<<(std::ostream& os, const Interval& v) {
    return os << "[" << v.l << ", " << v.r << "]";
}

/// Hausdorff distance between two closed intervals:
/// max of the absolute left-endpoint and right-endpoint differences.
inline double interval_hausdorff(const Interval& a, const Interval& b) noexcept {
    return std::max(std::abs(a.l - b.l), std::abs(a.r - b.r));
}

/// Direction-preserving variant of the interval Hausdorff distance.
///
/// Returns the endpoint difference of larger magnitude, keeping its sign:
/// positive when b lies to the right of a, negative when it lies to the
/// left. Ties go to the right-endpoint difference. The absolute value
/// always equals interval_hausdorff(a, b).
inline double signed_interval_hausdorff(const Interval& a, const Interval& b) noexcept {
    const double left = b.l - a.l;
    const double right = b.r - a.r;
    return std::abs(left) > std::abs(right) ? left : right;
}

}  // namespace fuzzdist
