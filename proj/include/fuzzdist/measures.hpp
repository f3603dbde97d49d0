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
#include <optional>
#include <string>
#include <vector>

#include "fuzzdist/alpha_cut.hpp"
#include "fuzzdist/errors.hpp"
#include "fuzzdist/fuzzy_set.hpp"
#include "fuzzdist/interval.hpp"

namespace fuzzdist {

/// Shared parameterization of the distance measures.
///
/// cut_samples controls how alpha-cut endpoints are located: a value n >= 2
/// places them on a scan grid of n equally spaced x-points over each set's
/// listed range (the convention the bundled reproduction tables were
/// computed with), 0 or 1 keeps exact interpolated crossings.
struct MeasureParams {
    AlphaGrid grid = AlphaGrid::uniform(51);
    double epsilon = 1.0;
    std::size_t x_grid_count = 51;
    bool signed_kernel = true;
    std::size_t cut_samples = 101;

    void validate() const {
        if (x_grid_count < 2) throw InvalidSetError("x_grid_count must be at least 2");
        if (epsilon < 0.0) throw InvalidSetError("epsilon must be nonnegative");
    }
};

/// Distance between two alpha-cuts, generalized to non-convex cuts: the
/// (signed or unsigned) interval Hausdorff distance averaged over every
/// pair of maximal segments. Single-segment cuts reduce to the plain
/// interval kernel.
inline double cut_kernel(const AlphaCutSet& a, const AlphaCutSet& b, bool signed_kernel) {
    if (a.empty() || b.empty())
        throw EmptyCutError("cut_kernel requires nonempty cuts");
    double sum = 0.0;
    for (const auto& sa : a.segments)
        for (const auto& sb : b.segments)
            sum += signed_kernel ? signed_interval_hausdorff(sa, sb)
                                 : interval_hausdorff(sa, sb);
    return sum / (static_cast<double>(a.segments.size()) * static_cast<double>(b.segments.size()));
}

namespace detail {

inline void require_normal(const FuzzySet& s, const char* measure) {
    if (!s.is_normal())
        throw NotNormalError(std::string(measure) + " requires normal operands; \"" +
                             s.label() + "\" has height " + std::to_string(s.height()));
}

// Union of the two listed x-ranges.
inline Interval common_range(const FuzzySet& a, const FuzzySet& b) {
    return Interval(std::min(a.x_min(), b.x_min()), std::max(a.x_max(), b.x_max()));
}

// Cut used inside the measures. Guards the floating-point edge where a set
// is normal within tolerance but its peak falls a hair short of the level.
inline AlphaCutSet measure_cut(const FuzzySet& s, double level, std::size_t samples) {
    AlphaCutSet c = alpha_cut_sampled(s, level, samples);
    if (c.empty() && level > 0.0) {
        const double h = s.height();
        if (h > 0.0 && level <= h + kNormalTolerance) c = alpha_cut_sampled(s, h, samples);
    }
    return c;
}

}  // namespace detail

/// Mean absolute membership difference over x_grid_count equally spaced
/// points. The range defaults to the union of both supports; passing an
/// explicit range keeps the value comparable across operand placements.
inline double vertical_slice_distance(const FuzzySet& a, const FuzzySet& b,
                                      const MeasureParams& params,
                                      std::optional<Interval> range = std::nullopt) {
    params.validate();
    const Interval r = range ? *range : detail::common_range(a, b);
    const double step = r.width() / static_cast<double>(params.x_grid_count - 1);
    double sum = 0.0;
    for (std::size_t i = 0; i < params.x_grid_count; ++i) {
        const double x = r.l + static_cast<double>(i) * step;
        sum += std::abs(a.membership_at(x) - b.membership_at(x));
    }
    return sum / static_cast<double>(params.x_grid_count);
}

/// Mean over the alpha-grid of the unsigned interval kernel between cuts
/// (level 0 uses the support hull). Operands must be normal.
inline double alpha_cut_mean_distance(const FuzzySet& a, const FuzzySet& b,
                                      const MeasureParams& params) {
    params.validate();
    detail::require_normal(a, "alpha-cut mean distance");
    detail::require_normal(b, "alpha-cut mean distance");
    double sum = 0.0;
    for (double level : params.grid.levels()) {
        const AlphaCutSet ca = detail::measure_cut(a, level, params.cut_samples);
        const AlphaCutSet cb = detail::measure_cut(b, level, params.cut_samples);
        sum += cut_kernel(ca, cb, /*signed_kernel=*/false);
    }
    return sum / static_cast<double>(params.grid.size());
}

/// Discretized integral of the per-level kernel over (0, 1]: the arithmetic
/// mean of cut_kernel across the positive grid levels. Level 0 carries no
/// information about set placement and is excluded. Operands must be normal.
inline double d_rr(const FuzzySet& a, const FuzzySet& b, const MeasureParams& params) {
    params.validate();
    detail::require_normal(a, "d_rr");
    detail::require_normal(b, "d_rr");
    double sum = 0.0;
    std::size_t n = 0;
    for (double level : params.grid.levels()) {
        if (level <= 0.0) continue;
        const AlphaCutSet ca = detail::measure_cut(a, level, params.cut_samples);
        const AlphaCutSet cb = detail::measure_cut(b, level, params.cut_samples);
        sum += cut_kernel(ca, cb, params.signed_kernel);
        ++n;
    }
    if (n == 0) throw MeasureError("d_rr needs at least one positive alpha level");
    return sum / static_cast<double>(n);
}

/// Level-weighted kernel mean: sum of y * h(A_y, B_y) over the positive grid
/// levels divided by the sum of the levels. Operands must be normal.
inline double d_cr(const FuzzySet& a, const FuzzySet& b, const MeasureParams& params) {
    params.validate();
    detail::require_normal(a, "d_cr");
    detail::require_normal(b, "d_cr");
    double num = 0.0, den = 0.0;
    for (double level : params.grid.levels()) {
        if (level <= 0.0) continue;
        const AlphaCutSet ca = detail::measure_cut(a, level, params.cut_samples);
        const AlphaCutSet cb = detail::measure_cut(b, level, params.cut_samples);
        num += level * cut_kernel(ca, cb, params.signed_kernel);
        den += level;
    }
    if (den == 0.0) throw MeasureError("d_cr needs at least one positive alpha level");
    return num / den;
}

namespace detail {

// Membership-mass term for the non-normal extension: epsilon times the sum
// of per-point membership differences (signed, or absolute for the unsigned
// variant) divided by the sum of the grid coordinates.
inline double membership_mass_term(const FuzzySet& a, const FuzzySet& b,
                                   const MeasureParams& params) {
    const Interval r = common_range(a, b);
    const double step = r.width() / static_cast<double>(params.x_grid_count - 1);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < params.x_grid_count; ++i) {
        const double x = r.l + static_cast<double>(i) * step;
        const double diff = b.membership_at(x) - a.membership_at(x);
        num += params.signed_kernel ? diff : std::abs(diff);
        den += x;
    }
    if (std::abs(den) < 1e-9)
        throw MeasureError("membership mass term undefined: x grid sums to zero");
    return params.epsilon * num / den;
}

}  // namespace detail

/// Non-normal extension of d_cr: the level-weighted kernel mean computed on
/// peak-normalized copies, plus an epsilon-weighted membership-mass term
/// evaluated on the original sets. With epsilon = 0 and normal operands this
/// equals d_cr exactly.
inline double d_cr_nonnormal(const FuzzySet& a, const FuzzySet& b, const MeasureParams& params) {
    params.validate();
    const FuzzySet na = peak_normalize(a);
    const FuzzySet nb = peak_normalize(b);
    return d_cr(na, nb, params) + detail::membership_mass_term(a, b, params);
}

/// One level of the empty-cut substitution input: the level and both
/// operands' cuts at it (either may be empty).
struct LevelCuts {
    double level = 0.0;
    AlphaCutSet a;
    AlphaCutSet b;
};

/// Per-level kernel value produced by empty_cut_policy / d_crf_trace.
struct LevelKernel {
    double level = 0.0;
    double value = 0.0;
    bool substituted = false;
};

/// Empty-cut substitution rule. Levels where both cuts are present map to
/// cut_kernel; levels where exactly one cut is present take the kernel value
/// (sign included) from the level of largest kernel magnitude among the
/// both-present levels; levels where both cuts are absent are dropped.
inline std::vector<LevelKernel> empty_cut_policy(const std::vector<LevelCuts>& levels,
                                                 bool signed_kernel) {
    std::vector<std::optional<double>> kernels(levels.size());
    double substitute = 0.0;
    double best_magnitude = -1.0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i].a.empty() || levels[i].b.empty()) continue;
        kernels[i] = cut_kernel(levels[i].a, levels[i].b, signed_kernel);
        if (std::abs(*kernels[i]) > best_magnitude) {
            best_magnitude = std::abs(*kernels[i]);
            substitute = *kernels[i];
        }
    }
    if (best_magnitude < 0.0)
        throw NoOverlapLevelsError("no alpha level has both cuts nonempty");

    std::vector<LevelKernel> out;
    out.reserve(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i].a.empty() && levels[i].b.empty()) continue;
        if (kernels[i])
            out.push_back({levels[i].level, *kernels[i], false});
        else
            out.push_back({levels[i].level, substitute, true});
    }
    return out;
}

/// Full evaluation record of the non-normal directional measure.
struct CrfTrace {
    std::vector<LevelKernel> kernels;  ///< positive levels up to lambda
    double lambda = 0.0;               ///< highest level with a nonempty cut
    double value = 0.0;
};

/// Directional distance for non-normal (and non-convex) sets.
///
/// Presence of a cut at each level is decided on the operands as given,
/// while kernel geometry is taken from their peak-normalized copies — the
/// heights say where a set stops existing, the normalized shape says where
/// it sits. Levels with exactly one cut present receive the substituted
/// kernel from empty_cut_policy, levels past lambda (where both sets are
/// gone) are dropped, and the result is the level-weighted kernel mean over
/// the remainder.
inline CrfTrace d_crf_trace(const FuzzySet& a, const FuzzySet& b, const MeasureParams& params) {
    params.validate();
    const double ha = a.height();
    const double hb = b.height();
    if (ha <= 0.0 && hb <= 0.0)
        throw DegenerateSetError("d_crf requires at least one set with positive height");
    const std::optional<FuzzySet> na = ha > 0.0 ? std::optional(peak_normalize(a)) : std::nullopt;
    const std::optional<FuzzySet> nb = hb > 0.0 ? std::optional(peak_normalize(b)) : std::nullopt;

    std::vector<LevelCuts> rows;
    rows.reserve(params.grid.size());
    for (double level : params.grid.levels()) {
        if (level <= 0.0) continue;
        LevelCuts row;
        row.level = level;
        row.a.level = row.b.level = level;
        if (na && !alpha_cut(a, level).empty())
            row.a = detail::measure_cut(*na, level, params.cut_samples);
        if (nb && !alpha_cut(b, level).empty())
            row.b = detail::measure_cut(*nb, level, params.cut_samples);
        rows.push_back(std::move(row));
    }

    CrfTrace trace;
    trace.kernels = empty_cut_policy(rows, params.signed_kernel);
    double num = 0.0, den = 0.0;
    for (const auto& lk : trace.kernels) {
        num += lk.level * lk.value;
        den += lk.level;
        trace.lambda = lk.level;
    }
    trace.value = num / den;
    return trace;
}

inline double d_crf(const FuzzySet& a, const FuzzySet& b, const MeasureParams& params) {
    return d_crf_trace(a, b, params).value;
}

/// The measures exposed through the CLI.
enum class Measure { vertical, alphacut, rr, cr, cr_nonnormal, crf };

inline const char* measure_name(Measure m) {
    switch (m) {
        case Measure::vertical: return "vertical";
        case Measure::alphacut: return "alphacut";
        case Measure::rr: return "rr";
        case Measure::cr: return "cr";
        case Measure::cr_nonnormal: return "cr-nonnormal";
        case Measure::crf: return "crf";
    }
    return "?";
}

inline std::optional<Measure> measure_from_name(const std::string& name) {
    for (Measure m : {Measure::vertical, Measure::alphacut, Measure::rr, Measure::cr,
                      Measure::cr_nonnormal, Measure::crf})
        if (name == measure_name(m)) return m;
    return std::nullopt;
}

/// Measures whose definitions assume normal operands.
inline bool requires_normal_operands(Measure m) {
    return m == Measure::alphacut || m == Measure::rr || m == Measure::cr;
}

inline double evaluate(Measure m, const FuzzySet& a, const FuzzySet& b,
                       const MeasureParams& params) {
    switch (m) {
        case Measure::vertical: return vertical_slice_distance(a, b, params);
        case Measure::alphacut: return alpha_cut_mean_distance(a, b, params);
        case Measure::rr: return d_rr(a, b, params);
        case Measure::cr: return d_cr(a, b, params);
        case Measure::cr_nonnormal: return d_cr_nonnormal(a, b, params);
        case Measure::crf: return d_crf(a, b, params);
    }
    throw MeasureError("unknown measure");
}

/// One computed distance: what was measured, between which operands, how.
struct DistanceReport {
    Measure measure = Measure::crf;
    double value = 0.0;
    MeasureParams params;
    std::string from;
    std::string to;
};

}  // namespace fuzzdist
