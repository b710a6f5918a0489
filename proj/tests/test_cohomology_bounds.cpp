/*
   Copyright 2026 The qbounds Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qbounds/cohomology_bounds.hpp"

using namespace qbounds;

namespace {

const CaseResidue R0{0}, R1{1}, R2{2}, R3{3};

}  // namespace

TEST_CASE("euler_char_twist", "[cohomology]") {
    CHECK(euler_char_twist({20, 51, 0, 0}, 1) == -29);
    CHECK(euler_char_twist({4, 1, 0, 0}, 1) == 5);
    CHECK(euler_char_twist({23, 58, 0, 0}, 2) == -44);
    const auto s = SurfaceInvariants::from_genus_defect(5, R0, 0);
    CHECK(s.degree == 20);
    CHECK(s.sectional_genus == 51);
    CHECK_THROWS_AS(SurfaceInvariants::from_genus_defect(5, R0, -1), DomainError);
}

TEST_CASE("projective_space_sections", "[cohomology]") {
    CHECK(projective_space_sections(4, 2) == 15);
    CHECK(projective_space_sections(3, -1) == 0);
    CHECK(projective_space_sections(2, 5) == 21);
    for (Integer n = 0; n <= 5; ++n)
        for (Integer t = -3; t <= 20; ++t) CHECK(projective_space_sections(n, t) == oracle::binom(t + n, n));
}

TEST_CASE("Riemann-Roch lower bound", "[cohomology]") {
    CHECK(h2_lower_riemann_roch(6, R0, 0, 0) == Rational(122));
    CHECK(h2_lower_riemann_roch(6, R0, 10, 0) == Rational(62));
    CHECK(h2_lower_riemann_roch(5, R3, 0, 0) == Rational(100));
    CHECK(h2_lower_riemann_roch(6, R0, 0, 3) == Rational(119));
    CHECK_THROWS_AS(h2_lower_riemann_roch(4, R0, 0, 0), DomainError);  // d = 16
    CHECK_NOTHROW(h2_lower_riemann_roch(4, R1, 0, 0));                 // d = 17
}

TEST_CASE("the displayed cubic equals the unsimplified Riemann-Roch route", "[cohomology][property]") {
    for (Integer r = 0; r < 4; ++r) {
        for (Integer k = 5; k <= 40; ++k) {
            for (Integer delta = 0; delta <= 10; ++delta) {
                for (Integer pg = 0; pg <= 3; ++pg) {
                    const Rational direct = h2_lower_riemann_roch(k, CaseResidue(r), delta, pg);
                    REQUIRE(direct == oracle::h2_lower_from_riemann_roch(k, r, delta, pg));
                    // q only strengthens the raw bound.
                    REQUIRE(direct + 2 == oracle::h2_lower_from_riemann_roch(k, r, delta, pg, 2));
                }
            }
        }
    }
}

TEST_CASE("Riemann-Roch route through euler_char_twist", "[cohomology][property]") {
    for (Integer r = 0; r < 4; ++r) {
        for (Integer k = 5; k <= 20; ++k) {
            for (Integer delta = 0; delta <= 10; ++delta) {
                const auto s = SurfaceInvariants::from_genus_defect(k, CaseResidue(r), delta, 1, 0);
                const Integer raw = projective_space_sections(4, k) - projective_space_sections(4, k - 4) -
                                    euler_char_twist(s, k);
                CHECK(Rational(raw) == h2_lower_riemann_roch(k, CaseResidue(r), delta, 1));
            }
        }
    }
}

TEST_CASE("rho", "[cohomology]") {
    for (Integer delta = 0; delta <= 10; ++delta) {
        CHECK(rho(6, delta, R0) == Rational(122 - 6 * delta));
        CHECK(rho(6, delta, R1) == Rational(131 - 6 * delta));
        CHECK(rho(6, delta, R2) == Rational(146 - 6 * delta));
        CHECK(rho(6, delta, R3) == Rational(167 - 6 * delta));
    }
}

TEST_CASE("lambda", "[cohomology]") {
    for (Integer delta = 0; delta <= 10; ++delta) CHECK(lambda(7, delta, R0) == Rational(122 - 6 * delta));
    CHECK(lambda(7, 10, R0) == Rational(62));
    CHECK(lambda(1, 0, R0) == Rational(0));
}

TEST_CASE("phi", "[cohomology]") {
    for (Integer delta = 0; delta <= 10; ++delta) {
        CHECK(phi(7, delta, R0) == Rational(111 - 6 * delta));
        CHECK(phi(7, delta, R1) == Rational(239, 2) - 6 * delta);
        CHECK(phi(7, delta, R2) == Rational(134 - 6 * delta));
        CHECK(phi(7, delta, R3) == Rational(309, 2) - 6 * delta);
    }
}

TEST_CASE("every family has leading coefficient 2/3", "[cohomology]") {
    for (auto f : {BoundFamily::Rho, BoundFamily::Lambda, BoundFamily::Phi, BoundFamily::RiemannRoch})
        for (Integer r = 0; r < 4; ++r) CHECK(bound_polynomial(f, CaseResidue(r)).k3 == Rational(2, 3));
}

TEST_CASE("rho is the Riemann-Roch bound at p_g = 0", "[cohomology][property]") {
    for (Integer r = 0; r < 4; ++r)
        for (Integer k = 5; k <= 60; ++k)
            for (Integer delta = 0; delta <= 10; ++delta)
                REQUIRE(rho(k, delta, CaseResidue(r)) == h2_lower_riemann_roch(k, CaseResidue(r), delta, 0));
}

TEST_CASE("lambda and phi are substitutions of a p_g cap", "[cohomology][property]") {
    for (Integer r = 0; r < 4; ++r) {
        for (Integer k = 5; k <= 60; ++k) {
            for (Integer delta = 0; delta <= 10; ++delta) {
                const CaseResidue rr(r);
                const Integer d = 4 * k + r;
                const Integer pi = genus_by_remainder(k, rr) - delta;
                // p_g <= pi - d + 3
                REQUIRE(lambda(k, delta, rr) == h2_lower_riemann_roch(k, rr, delta, Rational(pi - d + 3)));
                // p_g <= pi - d/2, kept rational
                REQUIRE(phi(k, delta, rr) == h2_lower_riemann_roch(k, rr, delta, Rational(pi) - Rational(d, 2)));
            }
        }
    }
}

TEST_CASE("pg_cap", "[cohomology]") {
    CHECK(pg_cap(51, 20, PgCapMode::Clifford) == 41);
    CHECK(pg_cap(51, 20, PgCapMode::LinearNormal) == 34);
    CHECK(pg_cap(0, 1, PgCapMode::LinearNormal) == 2);
    CHECK(pg_cap(55, 21, PgCapMode::Clifford) == 44);  // floor(44.5)
    CHECK(pg_cap(0, 3, PgCapMode::Clifford) == -2);    // floor(-1.5)
}

TEST_CASE("check_monotone", "[cohomology]") {
    CHECK(check_monotone(BoundFamily::Rho, R0, 10, 4, 50).increasing);
    CHECK(check_monotone(BoundFamily::Phi, R3, 10, 4, 50).increasing);
    const auto bad = check_monotone(BoundFamily::Phi, R0, 40, 1, 3);
    CHECK_FALSE(bad.increasing);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->first == 1);   // phi(2) - phi(1) = -delta
    CHECK(bad.witness->second == 0);
    CHECK_THROWS_AS(check_monotone(BoundFamily::Rho, R0, 10, 0, 5), DomainError);
}

TEST_CASE("all families are increasing on k in [4,60], delta in [0,10]", "[cohomology][property]") {
    for (auto f : {BoundFamily::Rho, BoundFamily::Lambda, BoundFamily::Phi})
        for (Integer r = 0; r < 4; ++r) CHECK(check_monotone(f, CaseResidue(r), 10, 4, 60).increasing);
}
