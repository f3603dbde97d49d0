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
#include <string>
#include <utility>
#include <vector>

#include "fuzzdist/errors.hpp"

namespace fuzzdist {

/// One sample of a membership function: grade mu at coordinate x.
struct MembershipPoint {
    double x = 0.0;
    double mu = 0.0;
};

inline bool operator==(const MembershipPoint& a, const MembershipPoint& b) noexcept {
    return a.x == b.x && a.mu == b.mu;
}

/// Tolerance for treating a set as normal (height == 1) and for accepting
/// slightly out-of-range membership grades produced by upstream arithmetic.
inline constexpr double kNormalTolerance = 1e-9;

/// A discretized fuzzy set over a real universe of discourse.
///
/// The membership function is defined by a strictly x-ascending sequence of
/// at least two sample points, linear interpolation between adjacent points,
/// and zero membership outside the listed x-range. Instances are immutable
/// after construction.
class FuzzySet {
public:
    FuzzySet(std::vector<MembershipPoint> points, std::string label = "")
        : points_(std::move(points)), label_(std::move(label)) {
        validate();
    }

    const std::vector<MembershipPoint>& points() const noexcept { return points_; }
    const std::string& label() const noexcept { return label_; }

    double x_min() const noexcept { return points_.front().x; }
    double x_max() const noexcept { return points_.back().x; }

    /// Membership grade at x: linear interpolation between listed points,
    /// zero outside [x_min, x_max]. Listed points are reproduced exactly.
    double membership_at(double x) const {
        if (!std::isfinite(x)) throw InvalidSetError("membership_at requires finite x");
        if (x < x_min() || x > x_max()) return 0.0;
        // first point with px >= x
        auto it = std::lower_bound(points_.begin(), points_.end(), x,
                                   [](const MembershipPoint& p, double v) { return p.x < v; });
        if (it != points_.end() && it->x == x) return it->mu;
        const MembershipPoint& hi = *it;
        const MembershipPoint& lo = *(it - 1);
        const double t = (x - lo.x) / (hi.x - lo.x);
        return lo.mu + t * (hi.mu - lo.mu);
    }

    /// Maximum membership grade. Equals the maximum over listed points
    /// because interpolation is linear.
    double height() const noexcept {
        double h = 0.0;
        for (const auto& p : points_) h = std::max(h, p.mu);
        return h;
    }

    bool is_normal() const noexcept { return std::abs(height() - 1.0) <= kNormalTolerance; }

    FuzzySet with_label(std::string label) const {
        return FuzzySet(points_, std::move(label));
    }

private:
    void validate() {
        if (points_.size() < 2)
            throw InvalidSetError("fuzzy set needs at least 2 points");
        for (std::size_t i = 0; i < points_.size(); ++i) {
            auto& p = points_[i];
            if (!std::isfinite(p.x) || !std::isfinite(p.mu))
                throw InvalidSetError("fuzzy set points must be finite");
            if (p.mu < -kNormalTolerance || p.mu > 1.0 + kNormalTolerance)
                throw InvalidSetError("membership grade outside [0, 1]");
            p.mu = std::clamp(p.mu, 0.0, 1.0);
            if (i > 0 && points_[i - 1].x >= p.x)
                throw InvalidSetError("fuzzy set points must be strictly ascending in x");
        }
    }

    std::vector<MembershipPoint> points_;
    std::string label_;
};

/// Scales all grades by 1/height so the result has height exactly 1.
/// Throws DegenerateSetError on an all-zero set.
inline FuzzySet peak_normalize(const FuzzySet& set) {
    const double h = set.height();
    if (h <= 0.0)
        throw DegenerateSetError("cannot peak-normalize a set with zero height");
    std::vector<MembershipPoint> pts = set.points();
    for (auto& p : pts) p.mu /= h;
    return FuzzySet(std::move(pts), set.label());
}

/// Rigid translation of the set along the x-axis.
inline FuzzySet shifted(const FuzzySet& set, double dx) {
    std::vector<MembershipPoint> pts = set.points();
    for (auto& p : pts) p.x += dx;
    return FuzzySet(std::move(pts), set.label());
}

}  // namespace fuzzdist
