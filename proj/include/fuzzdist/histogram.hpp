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

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "fuzzdist/errors.hpp"
#include "fuzzdist/fuzzy_set.hpp"

namespace fuzzdist {

/// Per-item tally of the discrete rating values 1..5.
struct RatingHistogram {
    int item_id = 0;
    std::string title;
    std::array<std::int64_t, 5> counts{};  // counts[r - 1] = how many rated r

    std::int64_t total() const noexcept {
        return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
    }

    std::int64_t max_count() const noexcept {
        std::int64_t m = 0;
        for (auto c : counts) m = std::max(m, c);
        return m;
    }
};

/// Fuzzy set with grades count / total: each grade is the fraction of
/// ratings at that value, so grades over the listed points sum to 1 and the
/// result is generally non-normal. Ratings nobody gave keep a listed point
/// with grade 0.
inline FuzzySet proportion_scale(const RatingHistogram& hist) {
    const std::int64_t total = hist.total();
    if (total <= 0) throw DegenerateSetError("histogram has no ratings");
    std::vector<MembershipPoint> pts;
    pts.reserve(5);
    for (int r = 1; r <= 5; ++r)
        pts.push_back({static_cast<double>(r),
                       static_cast<double>(hist.counts[r - 1]) / static_cast<double>(total)});
    return FuzzySet(std::move(pts), hist.title);
}

enum class FuzzifyMode { peak, proportion };

/// Histogram to fuzzy set at x = 1..5, scaled so the peak grade is 1
/// (peak mode) or so the grades sum to 1 (proportion mode).
inline FuzzySet fuzzify(const RatingHistogram& hist, FuzzifyMode mode) {
    if (mode == FuzzifyMode::proportion) return proportion_scale(hist);
    const std::int64_t peak = hist.max_count();
    if (peak <= 0) throw DegenerateSetError("histogram has no ratings");
    std::vector<MembershipPoint> pts;
    pts.reserve(5);
    for (int r = 1; r <= 5; ++r)
        pts.push_back({static_cast<double>(r),
                       static_cast<double>(hist.counts[r - 1]) / static_cast<double>(peak)});
    return FuzzySet(std::move(pts), hist.title);
}

}  // namespace fuzzdist
