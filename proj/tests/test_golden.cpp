/*
 * Copyright 2026 The bipencil Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "support.hpp"

#include "bipencil/golden.hpp"

#include <doctest.h>

using namespace bipencil;

TEST_CASE("closed-form sl2 example reproduces for several sizes") {
    for(std::size_t N = 2; N <= 4; ++N) {
        CAPTURE(N);
        GoldenReport r = golden_sl2_example(N, bipencil::testing::range_weights(N), Element{1, 2, 3});
        for(const auto& c : r.checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.pass);
        }
        CHECK(r.pass());
    }
}

TEST_CASE("golden report with non-default weights and shift") {
    std::vector<Rational> w{Rational(-1, 2), 3, Rational(7, 3)};
    GoldenReport r = golden_sl2_example(3, w, Element{Rational(-2, 5), 0, 4});
    CHECK(r.pass());
    REQUIRE(r.find("completed_family") != nullptr);
    CHECK(r.find("no_such_check") == nullptr);
    auto j = r.to_json();
    CHECK(j["checks"].size() == r.checks.size());
    CHECK(j["data"]["first_order_coefficients"].size() == 3);
}

TEST_CASE("golden example rejects bad input") {
    CHECK_THROWS_AS(golden_sl2_example(2, std::vector<Rational>{1, 1}, Element{1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(golden_sl2_example(2, std::vector<Rational>{0, 1}, Element{1, 2}), std::invalid_argument);
}
