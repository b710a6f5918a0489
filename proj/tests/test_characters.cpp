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
#include "qbounds/characters.hpp"
#include "qbounds/genus_formulas.hpp"

using namespace qbounds;
using NC = NumericalCharacter;

namespace {

std::vector<std::vector<Integer>> as_vectors(const std::vector<NC>& cs) {
    std::vector<std::vector<Integer>> out;
    for (const auto& c : cs) out.emplace_back(c.entries().begin(), c.entries().end());
    return out;
}

}  // namespace

TEST_CASE("character invariants are enforced", "[characters]") {
    CHECK_THROWS_AS(NC(std::vector<Integer>{}), DomainError);
    CHECK_THROWS_AS(NC({5, 6}), DomainError);      // increasing
    CHECK_THROWS_AS(NC({3, 3, 2}), DomainError);   // last entry < length
    CHECK_NOTHROW(NC({3, 3, 3}));
    CHECK(NC({8, 7, 6, 5}).length() == 4);
}

TEST_CASE("degree", "[characters]") {
    CHECK(degree(NC{8, 7, 6, 5}) == 20);
    CHECK(degree(NC{3}) == 3);
    CHECK(degree(NC{4, 3}) == 6);  // complete intersection (2,3)
}

TEST_CASE("h_deficiency", "[characters]") {
    CHECK(h_deficiency(NC{7, 7, 6, 6}, 5) == 2);
    CHECK(h_deficiency(NC{7, 7, 6, 6}, 6) == 0);
    CHECK(h_deficiency(NC{5}, 2) == 2);
    CHECK(h_deficiency(NC{8, 7, 6, 5}, 5) == 3);
    CHECK(h_deficiency(NC{8, 7, 6, 5}, 6) == 1);
    CHECK_THROWS_AS(h_deficiency(NC{5}, -1), DomainError);
}

TEST_CASE("h_deficiency vanishes from n0 - 1 on", "[characters][property]") {
    for (Integer d = 1; d <= 30; ++d) {
        for (Integer sigma = 1; sigma <= 5; ++sigma) {
            for (const auto& chi : enumerate_connected(d, sigma)) {
                for (Integer n = chi.front() - 1; n < chi.front() + 5; ++n) CHECK(h_deficiency(chi, n) == 0);
                if (chi.front() >= 3) CHECK(h_deficiency(chi, chi.front() - 2) > 0);
            }
        }
    }
}

TEST_CASE("genus", "[characters]") {
    CHECK(genus(NC{8, 7, 6, 5}) == 51);  // 17+14+10+6+3+1
    CHECK(genus(NC{7, 7, 6, 6}) == 49);
    CHECK(genus(NC{1}) == 0);
    CHECK(genus(NC{8, 7, 6, 5}) == max_genus(20, 4));
}

TEST_CASE("genus equals the double-loop oracle on connected characters", "[characters][property]") {
    std::size_t checked = 0;
    for (Integer sigma = 1; sigma <= 5; ++sigma) {
        for (Integer d = 1; d <= 40; ++d) {
            for (const auto& chi : enumerate_connected(d, sigma)) {
                const oracle::Seq s(chi.entries().begin(), chi.entries().end());
                REQUIRE(genus(chi) == oracle::genus_double_loop(s));
                REQUIRE(degree(chi) == oracle::degree(s));
                ++checked;
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("plane curve law", "[characters][property]") {
    for (Integer d = 3; d <= 30; ++d) CHECK(genus(NC{d}) == (d - 1) * (d - 2) / 2);
}

TEST_CASE("complete intersection law", "[characters][property]") {
    for (Integer a = 2; a <= 8; ++a) {
        for (Integer b = a; b <= 8; ++b) {
            std::vector<Integer> e;
            for (Integer i = 0; i < a; ++i) e.push_back(a + b - 1 - i);
            const NC chi(e);
            CHECK(degree(chi) == a * b);
            CHECK(genus(chi) == a * b * (a + b - 4) / 2 + 1);
            CHECK(is_connected(chi));
        }
    }
}

TEST_CASE("is_connected", "[characters]") {
    CHECK(is_connected(NC{8, 7, 6, 5}));
    CHECK(is_connected(NC{9}));
    CHECK_FALSE(is_connected(NC{5, 3}));
}

TEST_CASE("enumerate_connected", "[characters]") {
    using V = std::vector<std::vector<Integer>>;
    CHECK(as_vectors(enumerate_connected(20, 4)) == V{{8, 7, 6, 5}, {7, 7, 6, 6}});
    CHECK(as_vectors(enumerate_connected(21, 4)) == V{{8, 7, 6, 6}, {7, 7, 7, 6}});
    CHECK(as_vectors(enumerate_connected(3, 1)) == V{{3}});
    CHECK(enumerate_connected(5, 3).empty());  // needs d >= sigma(sigma+1)/2
    CHECK_THROWS_AS(enumerate_connected(0, 1), DomainError);
    CHECK_THROWS_AS(enumerate_connected(100, kMaxEnumerationLength + 1), DomainError);
}

TEST_CASE("enumeration matches exhaustive generation", "[characters][property]") {
    for (Integer d = 13; d <= 100; ++d) {
        const auto fast = as_vectors(enumerate_connected(d, 4));
        const auto brute = oracle::connected_characters(d, 4);
        REQUIRE(fast == brute);
    }
    for (Integer sigma = 1; sigma <= 5; ++sigma) {
        for (Integer d = 1; d <= 25; ++d) REQUIRE(as_vectors(enumerate_connected(d, sigma)) ==
                                                   oracle::connected_characters(d, sigma));
    }
}

TEST_CASE("max_connected_character", "[characters]") {
    CHECK(max_connected_character(20, 4).character == NC{8, 7, 6, 5});
    CHECK(max_connected_character(23, 4).character == NC{8, 8, 7, 6});
    const auto m = max_connected_character(6, 2);
    CHECK(m.character == NC{4, 3});
    CHECK(m.genus == 4);
    CHECK_FALSE(m.tie);
    CHECK_THROWS_AS(max_connected_character(5, 3), NoCharacterError);
}

TEST_CASE("maximal character ties are flagged", "[characters]") {
    // The flag must agree with an explicit count of genus-maximal characters.
    for (Integer sigma = 1; sigma <= 5; ++sigma) {
        for (Integer d = 1; d <= 30; ++d) {
            const auto all = enumerate_connected(d, sigma);
            if (all.empty()) continue;
            Integer best = -1, count = 0;
            for (const auto& c : all) best = std::max(best, genus(c));
            for (const auto& c : all) count += genus(c) == best ? 1 : 0;
            const auto m = max_connected_character(d, sigma);
            CHECK(m.genus == best);
            CHECK(m.tie == (count > 1));
        }
    }
}

TEST_CASE("maximal character genus is G(d,4)", "[characters][property]") {
    for (Integer d = 13; d <= 100; ++d) CHECK(max_connected_character(d, 4).genus == max_genus(d, 4));
}

TEST_CASE("the two characters of degree 4k, 4k+1, 4k+3", "[characters]") {
    for (Integer k = 4; k <= 10; ++k) {
        const auto c0 = enumerate_connected(4 * k, 4);
        REQUIRE(c0.size() == 2);
        CHECK(c0[0] == NC{k + 3, k + 2, k + 1, k});
        CHECK(c0[1] == NC{k + 2, k + 2, k + 1, k + 1});
        CHECK(genus(c0[0]) - genus(c0[1]) == 2);

        const auto c1 = enumerate_connected(4 * k + 1, 4);
        REQUIRE(c1.size() == 2);
        CHECK(c1[0] == NC{k + 3, k + 2, k + 1, k + 1});
        CHECK(c1[1] == NC{k + 2, k + 2, k + 2, k + 1});
        CHECK(genus(c1[0]) - genus(c1[1]) == 1);

        const auto c3 = enumerate_connected(4 * k + 3, 4);
        REQUIRE(c3.size() == 2);
        CHECK(c3[0] == NC{k + 3, k + 3, k + 2, k + 1});
        CHECK(c3[1] == NC{k + 3, k + 2, k + 2, k + 2});
        CHECK(genus(c3[0]) - genus(c3[1]) == 1);
    }
}
