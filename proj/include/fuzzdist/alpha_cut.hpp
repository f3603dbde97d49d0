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

#include <cmath>
#include <cstddef>
#include <iterator>
#include <set>
#include <vector>

#include "fuzzdist/errors.hpp"
#include "fuzzdist/fuzzy_set.hpp"
#include "fuzzdist/interval.hpp"

namespace fuzzdist {

/// The alpha-cut of a fuzzy set at one level: a possibly empty union of
/// disjoint closed intervals, sorted ascending.
struct AlphaCutSet {
    double level = 0.0;
    std::vector<Interval> segments;

    bool empty() const noexcept { return segments.empty(); }
};

/// Ascending sequence of distinct alpha levels in [0, 1].
class AlphaGrid {
public:
    explicit AlphaGrid(std::vector<double> levels) : levels_(std::move(levels)) {
        if (levels_.empty()) throw InvalidSetError("alpha grid must be nonempty");
        for (std::size_t i = 0; i < levels_.size(); ++i) {
            if (!std::isfinite(levels_[i]) || levels_[i] < 0.0 || levels_[i] > 1.0 + 1e-12)
                throw InvalidSetError("alpha levels must lie in [0, 1]");
            levels_[i] = std::min(levels_[i], 1.0);
            if (i > 0 && levels_[i - 1] >= levels_[i])
                throw InvalidSetError("alpha levels must be strictly ascending");
        }
    }

    /// count equally spaced levels spanning [0, 1]: i / (count - 1).
    static AlphaGrid uniform(std::size_t count) {
        if (count < 2) throw InvalidSetError("uniform alpha grid needs at least 2 levels");
        std::vector<double> lv(count);
        for (std::size_t i = 0; i < count; ++i)
            lv[i] = static_cast<double>(i) / static_cast<double>(count - 1);
        return AlphaGrid(std::move(lv));
    }

    /// Levels start, start+step, ..., up to and including stop (within
    /// floating-point slack).
    static AlphaGrid range(double start, double stop, double step) {
        if (step <= 0.0 || stop < start)
            throw InvalidSetError("alpha grid range requires step > 0 and stop >= start");
        std::vector<double> lv;
        const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
        lv.reserve(n + 1);
        for (std::size_t i = 0; i <= n; ++i) lv.push_back(start + static_cast<double>(i) * step);
        return AlphaGrid(std::move(lv));
    }

    const std::vector<double>& levels() const noexcept { return levels_; }
    std::size_t size() const noexcept { return levels_.size(); }

private:
    std::vector<double> levels_;
};

namespace detail {

// Support hull: smallest closed interval containing {x : mu(x) > 0}.
// Empty for an all-zero set.
inline std::vector<Interval> support_hull_segments(const FuzzySet& set) {
    const auto& pts = set.points();
    std::size_t first = pts.size(), last = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].mu > 0.0) {
            if (first == pts.size()) first = i;
            last = i;
        }
    }
    if (first == pts.size()) return {};
    // membership climbs away from a zero point, so the closure of the
    // positive region starts at the zero point itself
    const double l = first > 0 && pts[first - 1].mu == 0.0 ? pts[first - 1].x : pts[first].x;
    const double r = last + 1 < pts.size() && pts[last + 1].mu == 0.0 ? pts[last + 1].x : pts[last].x;
    return {Interval(l, r)};
}

}  // namespace detail

/// Alpha-cut {x : mu(x) >= level} as a union of maximal closed intervals.
///
/// Crossing points are located by exact inverse linear interpolation on the
/// piecewise-linear membership function. Level 0 is defined as the closed
/// convex hull of the support, keeping the operation total.
inline AlphaCutSet alpha_cut(const FuzzySet& set, double level) {
    if (!(level >= 0.0 && level <= 1.0))
        throw InvalidSetError("alpha level must lie in [0, 1]");

    AlphaCutSet cut;
    cut.level = level;
    if (level == 0.0) {
        cut.segments = detail::support_hull_segments(set);
        return cut;
    }

    const auto& pts = set.points();
    // crossing via a lerp that reproduces the piece endpoints exactly
    auto crossing = [level](const MembershipPoint& a, const MembershipPoint& b) {
        const double t = (level - a.mu) / (b.mu - a.mu);
        return a.x * (1.0 - t) + b.x * t;
    };
    bool inside = pts.front().mu >= level;
    double start = pts.front().x;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const auto& a = pts[i];
        const auto& b = pts[i + 1];
        if (!inside && a.mu < level && b.mu >= level) {
            start = crossing(a, b);
            inside = true;
        } else if (inside && a.mu >= level && b.mu < level) {
            cut.segments.emplace_back(start, std::max(start, crossing(a, b)));
            inside = false;
        }
    }
    if (inside) cut.segments.emplace_back(start, std::max(start, pts.back().x));
    return cut;
}

/// Convex hull of the support; identical to alpha_cut(set, 0).
inline AlphaCutSet support_hull(const FuzzySet& set) { return alpha_cut(set, 0.0); }

/// Alpha-cut with endpoints located on a scan grid of `samples` equally
/// spaced x-points spanning the set's listed range, mirroring level-set
/// extraction that walks a discretized axis: each segment keeps the first
/// and last grid points whose membership reaches the level (left endpoint
/// rounds up, right endpoint rounds down). A segment too narrow to contain
/// a grid point is kept exact. samples < 2 means no sampling.
inline AlphaCutSet alpha_cut_sampled(const FuzzySet& set, double level, std::size_t samples) {
    AlphaCutSet cut = alpha_cut(set, level);
    if (samples < 2) return cut;
    const double lo = set.x_min();
    const double step = (set.x_max() - lo) / static_cast<double>(samples - 1);
    if (step <= 0.0) return cut;
    for (auto& seg : cut.segments) {
        const double li = std::ceil((seg.l - lo) / step - 1e-9);
        const double ri = std::floor((seg.r - lo) / step + 1e-9);
        if (li > ri) continue;
        seg = Interval(lo + li * step, lo + ri * step);
    }
    return cut;
}

/// True when every alpha-cut is a single interval. Probes the levels where
/// the segment count can change: just above each listed grade.
inline bool is_convex(const FuzzySet& set) {
    std::set<double> grades;
    for (const auto& p : set.points()) grades.insert(p.mu);
    std::vector<double> probes;
    for (auto it = grades.begin(); it != grades.end(); ++it) {
        auto next = std::next(it);
        if (*it > 0.0) probes.push_back(*it);
        if (next != grades.end()) probes.push_back((*it + *next) / 2.0);
    }
    for (double level : probes)
        if (alpha_cut(set, level).segments.size() > 1) return false;
    return true;
}

}  // namespace fuzzdist
