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

#include "bipencil/laurent.hpp"

#include <doctest.h>

using namespace bipencil;
using bipencil::testing::oracle;

namespace {

void check_against_oracle(const GaudinSystem& sys, const nlohmann::json& ref) {
    std::vector<std::string> names = ref["variables"];
    REQUIRE(names == sys.names);
    const Poly& cas = sys.casimirs.generators.at(0);
    for(std::size_t j = 0; j < sys.sites(); ++j) {
        const auto& orders = ref["poles"][std::to_string(j)];
        int top            = laurent_order_bound(cas, sys.sites());
        LaurentExpansion ex = pole_expand(cas, sys.site_maps, sys.weights, sys.weights[j], top);
        for(const auto& [order, text] : orders.items()) {
            CAPTURE(j);
            CAPTURE(order);
            CHECK(ex.at(std::stoi(order)) == parse_poly(text.get<std::string>(), names));
        }
    }
}

} // namespace

TEST_CASE("pole expansion of the coadjoint sl2 model matches series expansion") {
    check_against_oracle(bipencil::testing::coadjoint_system("sl2", 3), oracle()["sl2_coadjoint_N3"]);
}

TEST_CASE("pole expansion of the canonical sl2 model matches series expansion") {
    check_against_oracle(sl2_canonical(2, bipencil::testing::range_weights(2)), oracle()["sl2_canonical_N2"]);
    check_against_oracle(sl2_canonical(3, bipencil::testing::range_weights(3)), oracle()["sl2_canonical_N3"]);
}

TEST_CASE("first-order coefficient for two canonical sites") {
    GaudinSystem sys = sl2_canonical(2, bipencil::testing::range_weights(2));
    LaurentExpansion ex = pole_expand(sys.casimirs.generators[0], sys.site_maps, sys.weights, 0, 2);
    CHECK(ex.at(-1) == parse_poly("(p2*q1 - p1*q2)^2", sys.names));
    CHECK(ex.at(-2).is_zero());
}

TEST_CASE("single site has only the Casimir at second order") {
    GaudinSystem sys = bipencil::testing::coadjoint_system("sl2", 1);
    const Poly& cas  = sys.casimirs.generators[0];
    LaurentExpansion ex = pole_expand(cas, sys.site_maps, sys.weights, sys.weights[0], 2);
    CHECK(ex.lowest_order == -2);
    CHECK(ex.at(-2) == parse_poly("h_1^2 + 4*e_1*f_1", sys.names));
    for(int k = -1; k <= 2; ++k) CHECK(ex.at(k).is_zero());
}

TEST_CASE("constant function expands to its constant") {
    GaudinSystem sys = bipencil::testing::coadjoint_system("sl2", 2);
    Poly c           = Poly::constant(3, Rational(7, 2));
    LaurentExpansion ex = pole_expand(c, sys.site_maps, sys.weights, sys.weights[1], 3);
    CHECK(ex.lowest_order == 0);
    CHECK(ex.at(0) == Poly::constant(sys.ambient_dim, Rational(7, 2)));
    for(int k = 1; k <= 3; ++k) CHECK(ex.at(k).is_zero());
}

TEST_CASE("undeclared pole is rejected") {
    GaudinSystem sys = bipencil::testing::coadjoint_system("sl2", 2);
    CHECK_THROWS_AS(pole_expand(sys.casimirs.generators[0], sys.site_maps, sys.weights, Rational(5), 2),
                    std::invalid_argument);
}

TEST_CASE("principal parts resum the composition off the poles") {
    Sampler s(31);
    for(const char* name : {"sl2", "so3", "sl3"}) {
        GaudinSystem sys = bipencil::testing::coadjoint_system(name, 3);
        for(const auto& f : sys.casimirs.generators) {
            int top = laurent_order_bound(f, sys.sites());
            std::vector<LaurentExpansion> parts;
            for(const auto& a : sys.weights) parts.push_back(pole_expand(f, sys.site_maps, sys.weights, a, top));
            for(int trial = 0; trial < 3; ++trial) {
                Rational r0 = Rational(s.rational(20)) + Rational(1, 3);  // weights are integers
                Vector x    = s.vector(sys.ambient_dim, 10);
                // mu at the affine parameter: sum_j x_j / (r0 - a_j)
                std::vector<Poly> mu(sys.algebra.dim(), Poly(sys.ambient_dim));
                for(std::size_t j = 0; j < sys.sites(); ++j)
                    for(std::size_t k = 0; k < sys.algebra.dim(); ++k)
                        mu[k] += (1 / (r0 - sys.weights[j])) * sys.site_maps[j][k];
                Rational lhs = eval(compose(f, mu, sys.ambient_dim), x);
                Rational rhs = f.constant_term();
                for(const auto& ex : parts) rhs += eval(ex.principal_part_at(r0), x);
                CHECK(lhs == rhs);
            }
        }
    }
}
