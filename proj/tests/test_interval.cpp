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

#include "fuzzdist/interval.hpp"

using namespace fuzzdist;

TEST_CASE("interval invariants") {
    CHECK_THROWS_AS(Interval(3.0, 1.0), InvalidSetError);
    CHECK_THROWS_AS(Interval(0.0, std::numeric_limits<double>::infinity()), InvalidSetError);
    const Interval v(1.0, 3.0);
    CHECK(v.width() == 2.0);
    CHECK(v.contains(1.0));
    CHECK(v.contains(3.0));
    CHECK_FALSE(v.contains(3.5));
}

TEST_CASE("interval_hausdorff") {
    CHECK(interval_hausdorff({1, 3}, {5, 11}) == 8.0);
    CHECK(interval_hausdorff({2, 7}, {2, 7}) == 0.0);
    CHECK(interval_hausdorff({0, 10}, {2, 9}) == 2.0);  // max{|0-2|, |10-9|}
}

TEST_CASE("signed_interval_hausdorff keeps magnitude and direction") {
    CHECK(signed_interval_hausdorff({1, 3}, {5, 11}) == 8.0);
    CHECK(signed_interval_hausdorff({5, 11}, {1, 3}) == -8.0);
    // equal magnitudes resolve to the right-endpoint difference
    CHECK(signed_interval_hausdorff({0, 4}, {-2, 6}) == 2.0);
    CHECK(signed_interval_hausdorff({2, 7}, {2, 7}) == 0.0);
}
