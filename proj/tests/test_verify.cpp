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

#include "bipencil/verify.hpp"

#include <doctest.h>

using namespace bipencil;
using bipencil::testing::coadjoint_system;
using bipencil::testing::oracle;
using bipencil::testing::range_weights;

TEST_CASE("involutivity certificates") {
    Bivector can = canonical_weighted(1, std::vector<Rational>{1});
    IntegralFamily pq;
    pq.ambient_dim = 2;
    pq.members.push_back({Poly::variable(2, 0), {}});
    pq.members.push_back({Poly::variable(2, 1), {}});
    Certificate c = involutivity(can, pq, {"p1", "q1"});
    CHECK_FALSE(c.pass);
    CHECK(c.witness["pair"] == nlohmann::json::array({0, 1}));
    CHECK(c.witness["bracket"] == "1");
    CHECK(c.to_json()["status"] == "fail");

    IntegralFamily single;
    single.ambient_dim = 2;
    single.members.push_back({bipencil::testing::poly("p1^3*q1 - 2", {"p1", "q1"}), {}});
    CHECK(involutivity(can, single).pass);
    CHECK(involutivity(can, IntegralFamily{2, {}}).pass);
}

TEST_CASE("orbit tangent spaces") {
    GaudinSystem sys = coadjoint_system("sl2", 2);
    CHECK(orbit_tangent(sys, Vector{1, 2, -3, Rational(5, 2), -1, 4}).size() == 4);
    CHECK(orbit_tangent(sys, Vector(6)).empty());
    CHECK(orbit_tangent(sys, Vector{0, 0, 0, Rational(5, 2), -1, 4}).size() == 2);
    CHECK_THROWS_AS(orbit_tangent(sys, Vector{1, 2}), std::invalid_argument);
    GaudinSystem can = sl2_canonical(3, range_weights(3));
    CHECK(orbit_tangent(can, Vector{1, 2, 3, 4, 5, 6}).size() == 6);
}

TEST_CASE("independence matches exact Jacobian ranks") {
    const auto& ref = oracle()["independence"];
    for(std::size_t N : {2, 3}) {
        const auto& r    = ref["coadjoint_N" + std::to_string(N)];
        GaudinSystem sys = coadjoint_system("sl2", N);
        Vector x         = bipencil::testing::rationals(r["point"]);
        IntegralFamily G = family_G(sys, PencilDirection(1, 0), bipencil::testing::rationals(r["shift"]));
        auto T           = orbit_tangent(sys, x);
        CHECK(T.size() == r["orbit_dim"].get<std::size_t>());
        CHECK(independence(G, T, x) == r["independent"].get<std::size_t>());
        CHECK(completeness_count(sys, x) == N);
    }
    for(std::size_t N : {2, 3, 4}) {
        const auto& r    = ref["canonical_N" + std::to_string(N)];
        GaudinSystem sys = sl2_canonical(N, range_weights(N));
        Vector x         = bipencil::testing::rationals(r["point"]);
        auto T           = orbit_tangent(sys, x);
        IntegralFamily F = family_F(sys);
        IntegralFamily G = family_G(sys, PencilDirection(1, 0), bipencil::testing::rationals(r["shift"]));
        CHECK(independence(F, T, x) == r["F_independent"].get<std::size_t>());
        CHECK(independence(G, T, x) == r["G_independent"].get<std::size_t>());
        CHECK(completeness_count(sys, x) == N);
    }
    IntegralFamily constants{3, {{Poly::constant(3, 5), {}}}};
    CHECK(independence(constants, orbit_tangent(coadjoint_system("sl2", 1), Vector{1, 2, 3}), Vector{1, 2, 3}) == 0);
}

TEST_CASE("completeness counts") {
    CHECK(completeness_count(coadjoint_system("sl2", 1), Vector{1, 2, 3}) == 1);
    CHECK(completeness_count(coadjoint_system("sl2", 3), Vector{1, 2, 3, -1, 4, 2, 7, 1, -5}) == 3);
    Sampler s(1);
    GaudinSystem sl3 = coadjoint_system("sl3", 2);
    CHECK(completeness_count(sl3, random_generic_point(sl3, s)) == 6);
}

TEST_CASE("admissibility") {
    Sampler s(77);
    GaudinSystem two = coadjoint_system("sl2", 2);
    Vector x         = random_generic_point(two, s);
    Certificate c    = admissibility(two, x, s);
    CHECK(c.pass);
    CHECK(c.witness["intersection_dim"] == 0);
    CHECK(c.witness["algebra_rank"] == 1);
    CHECK(c.witness["stabilizer_ranks"] == nlohmann::json::array({1, 1}));

    GaudinSystem one = coadjoint_system("sl2", 1);
    Certificate c1   = admissibility(one, random_generic_point(one, s), s);
    CHECK_FALSE(c1.pass);
    CHECK(c1.witness["intersection_dim"] == 1);
    CHECK(c1.witness["discrete_intersection"] == false);

    Certificate same = admissibility(two, Vector{1, 0, 0, 1, 0, 0}, s);
    CHECK_FALSE(same.pass);
    CHECK(same.witness["intersection_dim"] == 1);

    GaudinSystem gl2 = coadjoint_system("gl2", 3);
    CHECK_FALSE(admissibility(gl2, random_generic_point(gl2, s), s).pass);  // the centre stabilizes everything
}

TEST_CASE("Kronecker certificates") {
    Sampler s(5);
    GaudinSystem sys = coadjoint_system("sl2", 3);
    Vector x         = random_generic_point(sys, s);
    auto ts          = random_directions(sys.pencil, 3, s);
    Certificate c    = kronecker_certificate(sys, x, ts, s);
    CHECK(c.pass);
    REQUIRE(c.witness["directions"].size() == 6);
    for(const auto& row : c.witness["directions"]) {
        CHECK(row["reduced_corank"] == 1);
        CHECK(row["predicted_corank"] == 1);
        CHECK(row["ambient_rank"] == (row["exceptional"].get<bool>() ? 4 : 6));
    }
    CHECK(c.to_json()["note"].get<std::string>().find("not constructed") != std::string::npos);

    GaudinSystem two = coadjoint_system("sl2", 2);
    Certificate bad  = kronecker_certificate(two, Vector{1, 0, 0, 1, 0, 0}, ts, s);
    CHECK_FALSE(bad.pass);
    CHECK(bad.witness.contains("admissibility"));

    GaudinSystem ab = coadjoint_system("abelian2", 2);
    Certificate deg = kronecker_certificate(ab, Vector{1, 2, 3, 4}, ts, s);
    CHECK(deg.pass);
    CHECK(deg.witness["degenerate"] == true);

    std::vector<PencilDirection> with_e{PencilDirection(1, 0), PencilDirection(2, -1)};
    CHECK_THROWS_AS(kronecker_certificate(sys, x, with_e, s), std::invalid_argument);
}

TEST_CASE("random sampling helpers") {
    Sampler a(8), b(8);
    GaudinSystem sys = coadjoint_system("so3", 3);
    CHECK(random_generic_point(sys, a) == random_generic_point(sys, b));
    auto ts = random_directions(sys.pencil, 5, a);
    CHECK(ts.size() == 5);
    for(const auto& t : ts) CHECK_FALSE(sys.pencil.is_exceptional(t));
    LieAlgebra sl3 = catalog_algebra("sl3");
    Element reg    = random_regular_element(sl3, a);
    CHECK(rank_at(lie_poisson(sl3), reg) == 6);
    CHECK(vector_to_json(Vector{Rational(1, 2), -3}) == nlohmann::json::array({"1/2", "-3"}));
}
