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

#include "qbounds/report.hpp"

using namespace qbounds;

namespace {

/// True if any number anywhere in the document is a float.
bool has_float(const json& j) {
    if (j.is_number_float()) return true;
    if (j.is_structured())
        for (const auto& v : j) if (has_float(v)) return true;
    return false;
}

}  // namespace

TEST_CASE("rational encoding", "[report]") {
    const Rational x(-239, 2);
    const json j = rational_to_json(x);
    CHECK(j["numerator"] == -239);
    CHECK(j["denominator"] == 2);
    CHECK(rational_from_json(j) == x);
    CHECK_THROWS_AS(rational_from_json(json{{"numerator", 1}, {"denominator", 0}}), DomainError);
}

TEST_CASE("documents round-trip through JSON", "[report]") {
    for (const auto& doc : {cmd_chars(20, 4), cmd_poly(BoundFamily::Phi, 7, 3, CaseResidue(1)),
                            cmd_bounds(std::nullopt, VanishingAssumption::OmegaTwistVanishes)}) {
        const json j = to_json(doc);
        const auto back = report_from_json(json::parse(j.dump()));
        CHECK(to_json(back) == j);
        CHECK_FALSE(has_float(j));
        for (const char* key : {"version", "command", "params", "payload", "verdict"}) CHECK(j.contains(key));
    }
}

TEST_CASE("traces round-trip and replay", "[report]") {
    const auto t = derive_theorem(VanishingAssumption::GeometricGenusZero);
    const auto back = trace_from_json(json::parse(trace_to_json(t).dump()));
    CHECK(trace_to_json(back) == trace_to_json(t));
    CHECK(replay(back).empty());
    REQUIRE(back.steps.size() == t.steps.size());
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        CHECK(back.steps[i].lhs == t.steps[i].lhs);
        CHECK(back.steps[i].rhs == t.steps[i].rhs);
    }
}

TEST_CASE("cmd_chars", "[report]") {
    const auto d20 = cmd_chars(20, 4);
    CHECK(d20.payload["characters"].size() == 2);
    CHECK(d20.payload["maximal"]["entries"] == json({8, 7, 6, 5}));
    CHECK(d20.payload["maximal"]["genus"] == 51);
    CHECK(cmd_chars(3, 1).payload["characters"].size() == 1);

    const auto d23 = cmd_chars(23, 4);
    const auto& cs = d23.payload["characters"];
    REQUIRE(cs.size() == 2);
    CHECK(cs[0]["genus"].get<Integer>() - cs[1]["genus"].get<Integer>() == 1);

    const auto none = cmd_chars(5, 3);
    CHECK(none.payload["characters"].empty());
    CHECK(none.payload.contains("note"));
    CHECK(none.exit_code() == kExitOk);
}

TEST_CASE("cmd_genus", "[report]") {
    const auto doc = cmd_genus(10, 30, 4, std::nullopt);
    CHECK(doc.verdict.ok);
    CHECK(doc.payload["rows"].size() == 18);
    CHECK(doc.payload.contains("note"));
    const auto j = cmd_genus(21, 21, 4, 81);
    CHECK(j.payload["rows"][0]["jacobi_genus"] == 46);
    CHECK(j.payload["rows"][0]["delta"] == 9);
}

TEST_CASE("cmd_poly", "[report]") {
    const auto doc = cmd_poly(BoundFamily::Phi, 7, 0, CaseResidue(1));
    CHECK(rational_from_json(doc.payload["value"]) == Rational(239, 2));
    const auto rr = cmd_poly(BoundFamily::RiemannRoch, 6, 0, CaseResidue(0), Rational(3));
    CHECK(rational_from_json(rr.payload["value"]) == Rational(119));
}

TEST_CASE("cmd_bounds", "[report]") {
    const auto all = cmd_bounds(std::nullopt, VanishingAssumption::GeometricGenusZero);
    CHECK(all.exit_code() == kExitOk);
    CHECK(all.payload["final_bound"] == 23);
    const auto r0 = cmd_bounds(0, VanishingAssumption::OmegaTwistVanishes);
    CHECK(r0.payload["final_bound"] == 24);
    const auto omega = cmd_bounds(std::nullopt, VanishingAssumption::OmegaTwistVanishes, 81, 4);
    CHECK(omega.payload["final_bound"] == 27);
    const auto bad = cmd_bounds(std::nullopt, VanishingAssumption::OmegaTwistVanishes, 90);
    CHECK(bad.exit_code() == kExitCheckFailed);
    CHECK(bad.payload["final_bound"].is_null());
}

TEST_CASE("cmd_verify", "[report]") {
    const auto doc = cmd_verify();
    CHECK(doc.exit_code() == kExitOk);
    CHECK(doc.payload["total"].get<std::size_t>() >= 25);
    CHECK(doc.payload["passed"] == doc.payload["total"]);
    CHECK(doc.payload["total"] == 54);
}

TEST_CASE("cmd_verify detects a corrupted coefficient", "[report]") {
    for (auto f : {BoundFamily::Rho, BoundFamily::Lambda, BoundFamily::Phi}) {
        const auto doc = cmd_verify({f});
        CHECK(doc.exit_code() == kExitCheckFailed);
        const std::string name(to_string(f));
        for (const auto& row : doc.payload["rows"]) {
            const auto claim = row["claim"].get<std::string>();
            // Exactly the evaluation rows of the corrupted family fail.
            const bool reads_family = claim.rfind(name + "(", 0) == 0;
            CHECK(row["pass"].get<bool>() == !reads_family);
        }
    }
}

TEST_CASE("render_text", "[report]") {
    CHECK(render_text(cmd_chars(20, 4)).find("[8,7,6,5]") != std::string::npos);
    CHECK(render_text(cmd_verify()).find("PASS") != std::string::npos);
}
