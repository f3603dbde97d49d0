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

#include <catch2/catch.hpp>

#include "fuzzdist/measures.hpp"
#include "support/oracles.hpp"
#include "support/sets.hpp"

using namespace fuzzdist;

TEST_CASE("cut_kernel averages over segment pairs") {
    const AlphaCutSet split{0.8, {{1.8, 2.6}, {3.5, 4.3}}};
    const AlphaCutSet whole{0.8, {{6.8, 9.2}}};
    CHECK(cut_kernel(split, whole, true) == Approx(5.75).margin(1e-12));  // (6.6 + 4.9) / 2

    // single segments reduce to the interval kernel
    const AlphaCutSet a{0.5, {{1, 3}}};
    const AlphaCutSet b{0.5, {{5, 11}}};
    CHECK(cut_kernel(a, b, true) == signed_interval_hausdorff({1, 3}, {5, 11}));
    CHECK(cut_kernel(a, b, false) == interval_hausdorff({1, 3}, {5, 11}));

    // all four cross pairs of a split cut against itself cancel
    const AlphaCutSet self{0.5, {{0, 1}, {2, 3}}};
    CHECK(cut_kernel(self, self, true) == 0.0);

    CHECK_THROWS_AS(cut_kernel(AlphaCutSet{0.5, {}}, whole, true), EmptyCutError);
    CHECK_THROWS_AS(cut_kernel(whole, AlphaCutSet{0.5, {}}, true), EmptyCutError);
}

TEST_CASE("vertical slice distance") {
    const FuzzySet a = testsets::triangle(1, 2, 3, "a");
    const FuzzySet b = testsets::triangle(5, 6.5, 8, "b");
    MeasureParams p;
    CHECK(vertical_slice_distance(a, a, p) == 0.0);

    // matches a much finer independent grid
    p.x_grid_count = 1001;
    const double got = vertical_slice_distance(a, b, p);
    const double want = oracles::vertical_mean(a, b, 1.0, 8.0, 10010);
    CHECK(got == Approx(want).margin(1e-3));
    CHECK(got >= 0.0);
    CHECK(got <= 1.0);

    // with a fixed range the value ignores how far apart disjoint equal
    // shapes sit
    const Interval range(0.0, 20.0);
    const FuzzySet near = testsets::triangle(5, 6, 7);
    const FuzzySet far = testsets::triangle(12, 13, 14);
    CHECK(vertical_slice_distance(a, near, p, range) ==
          Approx(vertical_slice_distance(a, far, p, range)).margin(1e-9));
}

TEST_CASE("alpha-cut mean distance matches a term-by-term oracle") {
    const FuzzySet a = testsets::triangle(0, 2, 5);
    const FuzzySet b = testsets::triangle(4, 7, 8);
    MeasureParams p;
    p.cut_samples = 0;  // exact crossings, same route the oracle bisects toward
    const double got = alpha_cut_mean_distance(a, b, p);
    const double want = oracles::alpha_cut_mean(a, b, p.grid.levels());
    CHECK(got == Approx(want).margin(1e-9));

    CHECK(alpha_cut_mean_distance(a, a, p) == 0.0);
    CHECK(alpha_cut_mean_distance(a, shifted(a, 2.0), p) == Approx(2.0).margin(1e-9));
    CHECK_THROWS_AS(alpha_cut_mean_distance(a, testsets::smb_rounded(), p), NotNormalError);
}

TEST_CASE("d_rr basics") {
    const FuzzySet s = testsets::triangle(0, 1, 2);
    MeasureParams p;
    CHECK(d_rr(s, s, p) == 0.0);
    CHECK(d_rr(s, shifted(s, 3.25), p) == Approx(3.25).margin(1e-9));
    CHECK(d_rr(s, shifted(s, 3.25), p) == -d_rr(shifted(s, 3.25), s, p));
    CHECK_THROWS_AS(d_rr(s, testsets::smb_rounded(), p), NotNormalError);
}

TEST_CASE("d_cr basics") {
    const FuzzySet s = testsets::triangle(0, 1, 2);
    MeasureParams p;
    CHECK(d_cr(s, s, p) == 0.0);
    CHECK(d_cr(s, shifted(s, 1.5), p) == Approx(1.5).margin(1e-9));
    CHECK_THROWS_AS(d_cr(testsets::smb_rounded(), s, p), NotNormalError);
}

TEST_CASE("film pair distances on peak-scaled rating histograms") {
    const FuzzySet smb = fuzzify(testsets::smb_histogram(), FuzzifyMode::peak);
    const FuzzySet sw = fuzzify(testsets::sw_histogram(), FuzzifyMode::peak);
    MeasureParams p;
    CHECK(d_rr(smb, sw, p) == Approx(2.775).margin(0.05));
    CHECK(d_cr(smb, sw, p) == Approx(3.270).margin(0.05));
    CHECK(d_rr(sw, smb, p) == -d_rr(smb, sw, p));
    CHECK(d_cr(sw, smb, p) == -d_cr(smb, sw, p));

    // unsigned kernels agree in magnitude
    MeasureParams u = p;
    u.signed_kernel = false;
    CHECK(d_rr(smb, sw, u) == Approx(std::abs(d_rr(smb, sw, p))));
    CHECK(d_cr(sw, smb, u) == Approx(std::abs(d_cr(smb, sw, p))));
}

TEST_CASE("distance grows with concavity against a fixed reference") {
    const FuzzySet ref = testsets::concavity_reference();
    MeasureParams p;
    double prev_rr = -1.0, prev_cr = -1.0;
    for (const FuzzySet& a : testsets::concavity_family()) {
        const double vrr = d_rr(a, ref, p);
        const double vcr = d_cr(a, ref, p);
        CHECK(vrr > prev_rr);
        CHECK(vcr > prev_cr);
        prev_rr = vrr;
        prev_cr = vcr;
    }
}

TEST_CASE("doubling the grid density barely moves the value") {
    const FuzzySet a = testsets::triangle(0, 2, 5);
    const FuzzySet b = testsets::triangle(6, 9, 11);
    MeasureParams p51;
    MeasureParams p101;
    p101.grid = AlphaGrid::uniform(101);
    CHECK(std::abs(d_rr(a, b, p51) - d_rr(a, b, p101)) < 0.01 * std::abs(d_rr(a, b, p51)));
    CHECK(std::abs(d_cr(a, b, p51) - d_cr(a, b, p101)) < 0.01 * std::abs(d_cr(a, b, p51)));
}

TEST_CASE("grids without positive levels are rejected") {
    const FuzzySet s = testsets::triangle(0, 1, 2);
    MeasureParams p;
    p.grid = AlphaGrid(std::vector<double>{0.0});
    CHECK_THROWS_AS(d_rr(s, s, p), MeasureError);
    CHECK_THROWS_AS(d_cr(s, s, p), MeasureError);
}

TEST_CASE("parameter validation") {
    MeasureParams p;
    p.x_grid_count = 1;
    const FuzzySet s = testsets::triangle(0, 1, 2);
    CHECK_THROWS_AS(vertical_slice_distance(s, s, p), InvalidSetError);
    p.x_grid_count = 51;
    p.epsilon = -1.0;
    CHECK_THROWS_AS(d_cr_nonnormal(s, s, p), InvalidSetError);
}

TEST_CASE("measure names round-trip") {
    for (Measure m : {Measure::vertical, Measure::alphacut, Measure::rr, Measure::cr,
                      Measure::cr_nonnormal, Measure::crf})
        CHECK(measure_from_name(measure_name(m)) == m);
    CHECK_FALSE(measure_from_name("nope").has_value());
    CHECK(requires_normal_operands(Measure::rr));
    CHECK(requires_normal_operands(Measure::cr));
    CHECK_FALSE(requires_normal_operands(Measure::crf));
}
