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

#include <random>
#include <vector>

#include "fuzzdist/fuzzy_set.hpp"
#include "fuzzdist/histogram.hpp"

namespace testsets {

// Rating tallies behind the two reference films used across the suites.
inline fuzzdist::RatingHistogram smb_histogram() {
    return {625, "SMB", {10, 7, 6, 3, 0}};
}

inline fuzzdist::RatingHistogram sw_histogram() {
    return {50, "SW", {9, 16, 57, 176, 325}};
}

// Rounded rating-fraction distributions of the same films.
inline fuzzdist::FuzzySet smb_rounded() {
    return fuzzdist::FuzzySet(
        {{1, 0.385}, {2, 0.269}, {3, 0.231}, {4, 0.115}, {5, 0.0}}, "SMB");
}

inline fuzzdist::FuzzySet sw_rounded() {
    return fuzzdist::FuzzySet(
        {{1, 0.015}, {2, 0.027}, {3, 0.098}, {4, 0.302}, {5, 0.557}}, "SW");
}

inline fuzzdist::FuzzySet triangle(double left, double peak, double right,
                                   std::string label = "") {
    return fuzzdist::FuzzySet({{left, 0.0}, {peak, 1.0}, {right, 0.0}}, std::move(label));
}

// Bimodal set whose 0.8-cut splits into [1.8, 2.6] and [3.5, 4.3].
inline fuzzdist::FuzzySet bimodal(double dip = 0.575) {
    return fuzzdist::FuzzySet(
        {{0.2, 0.0}, {2.2, 1.0}, {3.05, dip}, {3.9, 1.0}, {5.9, 0.0}}, "bimodal");
}

// Family of increasingly concave sets (k = 0 convex flat-top, k = 4 the
// bimodal shape above) plus a fixed convex reference to their right whose
// cuts are wider than theirs wherever the dip splits them.
inline std::vector<fuzzdist::FuzzySet> concavity_family() {
    std::vector<fuzzdist::FuzzySet> family;
    for (int k = 0; k <= 4; ++k) family.push_back(bimodal(1.0 - k * 0.10625));
    return family;
}

inline fuzzdist::FuzzySet concavity_reference() {
    return fuzzdist::FuzzySet({{6, 0.0}, {7.5, 1.0}, {10, 1.0}, {11.5, 0.0}}, "ref");
}

// Random convex normal set: triangle or trapezoid with well-separated knots.
inline fuzzdist::FuzzySet random_convex_normal(std::mt19937& rng) {
    std::uniform_real_distribution<double> pos(-20.0, 20.0);
    std::uniform_real_distribution<double> gap(0.2, 6.0);
    std::bernoulli_distribution trapezoid(0.5);
    const double x0 = pos(rng);
    std::vector<fuzzdist::MembershipPoint> pts;
    if (trapezoid(rng)) {
        const double x1 = x0 + gap(rng), x2 = x1 + gap(rng), x3 = x2 + gap(rng);
        pts = {{x0, 0.0}, {x1, 1.0}, {x2, 1.0}, {x3, 0.0}};
    } else {
        const double x1 = x0 + gap(rng), x2 = x1 + gap(rng);
        pts = {{x0, 0.0}, {x1, 1.0}, {x2, 0.0}};
    }
    return fuzzdist::FuzzySet(std::move(pts));
}

// Random piecewise-linear set, possibly non-normal and non-convex.
inline fuzzdist::FuzzySet random_set(std::mt19937& rng) {
    std::uniform_int_distribution<int> n_points(3, 8);
    std::uniform_real_distribution<double> pos(-10.0, 10.0);
    std::uniform_real_distribution<double> gap(0.1, 3.0);
    std::uniform_real_distribution<double> grade(0.0, 1.0);
    const int n = n_points(rng);
    std::vector<fuzzdist::MembershipPoint> pts;
    double x = pos(rng);
    for (int i = 0; i < n; ++i) {
        pts.push_back({x, grade(rng)});
        x += gap(rng);
    }
    return fuzzdist::FuzzySet(std::move(pts));
}

}  // namespace testsets
