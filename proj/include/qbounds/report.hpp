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

/*
 * Report documents for the command line front end.
 *
 * Every command produces a ReportDocument which renders either as a human
 * table or as JSON of the shape
 *
 *     { "version", "command", "params", "payload", "verdict" }
 *
 * (docs/report.schema.json). Rationals are always {"numerator", "denominator"}
 * objects; no value passes through floating point.
 */

#ifndef QBOUNDS_REPORT_HPP
#define QBOUNDS_REPORT_HPP

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qbounds/bound_engine.hpp"
#include "qbounds/characters.hpp"
#include "qbounds/cohomology_bounds.hpp"
#include "qbounds/genus_formulas.hpp"
#include "qbounds/rational.hpp"
#include "qbounds/version.hpp"

namespace qbounds {

using nlohmann::json;

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

// ---------------------------------------------------------------------------
// JSON encoding

inline json rational_to_json(const Rational& x) {
    return json{{"numerator", x.numerator()}, {"denominator", x.denominator()}};
}

inline Rational rational_from_json(const json& j) {
    const auto den = j.at("denominator").get<Integer>();
    if (den <= 0) throw DomainError("rational denominator must be positive");
    return Rational(j.at("numerator").get<Integer>(), den);
}

inline json character_to_json(const NumericalCharacter& chi) {
    return json(std::vector<Integer>(chi.entries().begin(), chi.entries().end()));
}

inline json step_to_json(const TraceStep& s) {
    return json{{"scope", s.scope},
                {"claim", s.claim},
                {"anchor", s.anchor},
                {"lhs", rational_to_json(s.lhs)},
                {"rhs", rational_to_json(s.rhs)},
                {"relation", std::string(to_string(s.relation))},
                {"verdict", s.verdict}};
}

inline TraceStep step_from_json(const json& j) {
    return {j.at("scope").get<std::string>(),
            j.at("claim").get<std::string>(),
            j.at("anchor").get<std::string>(),
            rational_from_json(j.at("lhs")),
            rational_from_json(j.at("rhs")),
            parse_relation(j.at("relation").get<std::string>()),
            j.at("verdict").get<bool>()};
}

inline json optional_to_json(const std::optional<Integer>& v) { return v ? json(*v) : json(nullptr); }

inline std::optional<Integer> optional_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<Integer>();
}

inline json trace_to_json(const DerivationTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps) steps.push_back(step_to_json(s));
    json cases = json::array();
    for (const auto& c : t.cases) {
        json branches = json::array();
        for (const auto& b : c.branches) {
            branches.push_back({{"label", b.label},
                                {"lower_family", std::string(to_string(b.lower_family))},
                                {"delta_lo", b.delta_lo},
                                {"delta_hi", b.delta_hi},
                                {"threshold", b.threshold}});
        }
        cases.push_back({{"r", c.r},
                         {"validity_floor_k", c.validity_floor_k},
                         {"branches", branches},
                         {"k_max", c.k_max},
                         {"degree_bound", c.degree_bound},
                         {"acm_cap", c.acm_cap},
                         {"final_bound", c.final_bound}});
    }
    return json{{"subject", t.subject},
                {"assumption", std::string(to_string(t.assumption))},
                {"mu_cap", t.mu_cap},
                {"steps", steps},
                {"notes", t.notes},
                {"cases", cases},
                {"k_max", optional_to_json(t.k_max)},
                {"final_bound", optional_to_json(t.final_bound)}};
}

inline DerivationTrace trace_from_json(const json& j) {
    DerivationTrace t{j.at("subject").get<std::string>(),
                      parse_assumption(j.at("assumption").get<std::string>()),
                      j.at("mu_cap").get<Integer>(),
                      {},
                      j.at("notes").get<std::vector<std::string>>(),
                      {},
                      optional_from_json(j.at("k_max")),
                      optional_from_json(j.at("final_bound"))};
    for (const auto& s : j.at("steps")) t.steps.push_back(step_from_json(s));
    for (const auto& c : j.at("cases")) {
        CaseSummary cs{c.at("r").get<Integer>(), c.at("validity_floor_k").get<Integer>(), {},
                       c.at("k_max").get<Integer>(), c.at("degree_bound").get<Integer>(),
                       c.at("acm_cap").get<Integer>(), c.at("final_bound").get<Integer>()};
        for (const auto& b : c.at("branches")) {
            cs.branches.push_back({b.at("label").get<std::string>(),
                                   parse_family(b.at("lower_family").get<std::string>()),
                                   b.at("delta_lo").get<Integer>(), b.at("delta_hi").get<Integer>(),
                                   b.at("threshold").get<Integer>()});
        }
        t.cases.push_back(std::move(cs));
    }
    return t;
}

// ---------------------------------------------------------------------------
// Documents

struct Verdict {
    bool ok;
    std::string summary;
};

struct ReportDocument {
    std::string version = kVersion;
    std::string command;
    json params = json::object();
    json payload = json::object();
    Verdict verdict{true, ""};

    int exit_code() const { return verdict.ok ? kExitOk : kExitCheckFailed; }
};

inline json to_json(const ReportDocument& doc) {
    return json{{"version", doc.version},
                {"command", doc.command},
                {"params", doc.params},
                {"payload", doc.payload},
                {"verdict", {{"status", doc.verdict.ok ? "pass" : "fail"}, {"summary", doc.verdict.summary}}}};
}

inline ReportDocument report_from_json(const json& j) {
    ReportDocument doc;
    doc.version = j.at("version").get<std::string>();
    doc.command = j.at("command").get<std::string>();
    doc.params = j.at("params");
    doc.payload = j.at("payload");
    const auto& v = j.at("verdict");
    doc.verdict = {v.at("status").get<std::string>() == "pass", v.at("summary").get<std::string>()};
    return doc;
}

// ---------------------------------------------------------------------------
// Commands

inline ReportDocument cmd_chars(Integer d, Integer sigma) {
    ReportDocument doc;
    doc.command = "chars";
    doc.params = {{"degree", d}, {"sigma", sigma}};
    const auto all = enumerate_connected(d, sigma);
    json list = json::array();
    std::optional<MaximalCharacter> best;
    if (!all.empty()) best = max_connected_character(d, sigma);
    for (const auto& chi : all) {
        list.push_back({{"entries", character_to_json(chi)},
                        {"degree", degree(chi)},
                        {"genus", genus(chi)},
                        {"maximal", best && best->character == chi}});
    }
    doc.payload["characters"] = list;
    if (best) {
        doc.payload["maximal"] = {{"entries", character_to_json(best->character)},
                                  {"genus", best->genus},
                                  {"tie", best->tie}};
        doc.verdict.summary = std::to_string(all.size()) + " connected character(s); maximal " +
                              best->character.to_string() + " of genus " + std::to_string(best->genus);
    } else {
        doc.payload["maximal"] = nullptr;
        doc.payload["note"] = "no connected numerical character has this degree and length";
        doc.verdict.summary = "no connected character exists";
    }
    return doc;
}

/// Genus table for d in [from, to] and surface degree s. Degrees outside the
/// validity range d > s(s-1) are skipped with a note.
inline ReportDocument cmd_genus(Integer from, Integer to, Integer s, std::optional<Integer> mu = std::nullopt) {
    ReportDocument doc;
    doc.command = "genus";
    doc.params = {{"from", from}, {"to", to}, {"surface_degree", s}, {"mu", optional_to_json(mu)}};
    if (from > to) throw DomainError("genus table needs from <= to");
    json rows = json::array();
    bool consistent = true;
    Integer skipped = 0;
    for (Integer d = from; d <= to; ++d) {
        if (d <= s * (s - 1)) {
            ++skipped;
            continue;
        }
        const auto budget = make_genus_budget(d, s);
        json row = {{"d", d},
                    {"r_notation", budget.r_notation.value()},
                    {"max_genus", max_genus(d, s)}};
        // Largest genus over connected characters of length s (s <= 8 keeps this cheap).
        if (s <= 8) {
            const auto best = max_connected_character(d, s);
            row["character_max_genus"] = best.genus;
            row["maximal_character"] = character_to_json(best.character);
            consistent = consistent && best.genus == row["max_genus"].get<Integer>();
        }
        if (s == 4) {
            row["r_case"] = budget.r_case.value();
            row["k"] = budget.k;
            row["quartic_closed_form"] = max_genus_quartic(d);
            row["by_remainder"] = genus_by_remainder(budget.k, budget.r_case);
            consistent = consistent && row["quartic_closed_form"] == row["max_genus"] &&
                         row["by_remainder"] == row["max_genus"];
            if (mu) {
                const Integer pi = jacobi_genus(d, *mu);
                row["jacobi_genus"] = pi;
                row["delta"] = row["max_genus"].get<Integer>() - pi;
            }
        }
        rows.push_back(row);
    }
    doc.payload["rows"] = rows;
    if (skipped) doc.payload["note"] = std::to_string(skipped) + " degree(s) with d <= s(s-1) skipped";
    doc.verdict = {consistent, consistent ? "all genus routes agree" : "genus routes disagree"};
    return doc;
}

inline ReportDocument cmd_poly(BoundFamily family, Integer k, Integer delta, CaseResidue r,
                               const Rational& p_g = Rational(0)) {
    ReportDocument doc;
    doc.command = "poly";
    doc.params = {{"family", std::string(to_string(family))},
                  {"k", k},
                  {"delta", delta},
                  {"r", r.value()},
                  {"p_g", rational_to_json(p_g)}};
    const auto poly = bound_polynomial(family, r);
    const Rational value = family == BoundFamily::RiemannRoch ? h2_lower_riemann_roch(k, r, delta, p_g)
                                                              : poly(k, delta);
    doc.payload = {{"value", rational_to_json(value)},
                   {"coefficients",
                    {{"k3", rational_to_json(poly.k3)},
                     {"k2", rational_to_json(poly.k2)},
                     {"k1", rational_to_json(poly.k1)},
                     {"k0", rational_to_json(poly.k0)},
                     {"delta_k", rational_to_json(poly.dk)},
                     {"delta_0", rational_to_json(poly.d0)},
                     {"p_g", rational_to_json(poly.pg)}}}};
    doc.verdict.summary = std::string(to_string(family)) + "(k=" + std::to_string(k) +
                          ", delta=" + std::to_string(delta) + ", r=" + std::to_string(r.value()) +
                          ") = " + to_string(value);
    return doc;
}

/// `r` unset derives every residue.
inline ReportDocument cmd_bounds(std::optional<Integer> r, VanishingAssumption assumption,
                                 Integer mu_cap = kDefaultMuCap, unsigned jobs = 1) {
    ReportDocument doc;
    doc.command = "bounds";
    doc.params = {{"r", r ? json(*r) : json("all")},
                  {"assumption", std::string(to_string(assumption))},
                  {"mu_cap", mu_cap},
                  {"jobs", jobs}};
    const DerivationTrace trace =
        r ? derive_case(CaseResidue(*r), assumption, mu_cap) : derive_theorem(assumption, mu_cap, jobs);
    doc.payload = trace_to_json(trace);
    if (trace.final_bound) {
        doc.verdict = {true, "d <= " + std::to_string(*trace.final_bound) + " (k <= " +
                                 std::to_string(*trace.k_max) + ")"};
    } else {
        std::string failed;
        for (const auto& s : trace.steps) {
            if (!s.verdict) {
                failed = s.scope + ": " + s.claim;
                break;
            }
        }
        doc.verdict = {false, "derivation failed at " + failed};
    }
    return doc;
}

// ---------------------------------------------------------------------------
// Golden suite

struct GoldenRow {
    std::string claim;
    std::string anchor;
    std::string expected;
    std::string computed;
    bool pass;
};

struct VerifyOptions {
    /// Test mode: shift the constant coefficient of one family by 1 in the
    /// suite's own evaluations, so the rows that read it must fail.
    std::optional<BoundFamily> corrupt;
};

namespace detail {

inline std::string join_characters(const std::vector<NumericalCharacter>& cs) {
    std::string s = "{";
    for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? ", " : "") + cs[i].to_string();
    return s + "}";
}

}  // namespace detail

inline std::vector<GoldenRow> golden_suite(const VerifyOptions& opts = {}) {
    std::vector<GoldenRow> rows;
    auto add = [&rows](std::string claim, std::string anchor, std::string expected, std::string computed) {
        const bool pass = expected == computed;
        rows.push_back({std::move(claim), std::move(anchor), std::move(expected), std::move(computed), pass});
    };
    auto eval = [&opts](BoundFamily f, Integer k, Integer delta, CaseResidue r) {
        Rational v = evaluate(f, k, delta, r);
        if (opts.corrupt == f) v += 1;
        return v;
    };

    // Lower-bound families at the first contradictory k, as affine functions of delta.
    struct AffineClaim {
        BoundFamily family;
        Integer k;
        Integer r;
        Rational constant;
    };
    const AffineClaim affine[] = {
        {BoundFamily::Rho, 6, 0, 122},           {BoundFamily::Rho, 6, 1, 131},
        {BoundFamily::Rho, 6, 2, 146},           {BoundFamily::Rho, 6, 3, 167},
        {BoundFamily::Lambda, 7, 0, 122},        {BoundFamily::Phi, 7, 0, 111},
        {BoundFamily::Phi, 7, 1, Rational(239, 2)}, {BoundFamily::Phi, 7, 2, 134},
        {BoundFamily::Phi, 7, 3, Rational(309, 2)},
    };
    for (const auto& a : affine) {
        std::string computed;
        for (Integer delta = 0; delta <= 10; ++delta) {
            const Rational v = eval(a.family, a.k, delta, CaseResidue(a.r));
            if (v != a.constant - 6 * delta) {
                computed = "differs at delta=" + std::to_string(delta) + ": " + to_string(v);
                break;
            }
        }
        const std::string expected = to_string(a.constant) + " - 6*delta";
        add(std::string(to_string(a.family)) + "(k=" + std::to_string(a.k) + ", r=" + std::to_string(a.r) +
                ") for delta in [0,10]",
            "lower-bound-evaluation", expected, computed.empty() ? expected : computed);
    }
    add("lambda(k=7, delta=10, r=0)", "lower-bound-evaluation", "62",
        to_string(eval(BoundFamily::Lambda, 7, 10, CaseResidue(0))));
    add("rho(k=6, delta=10, r=0)", "lower-bound-evaluation", "62",
        to_string(eval(BoundFamily::Rho, 6, 10, CaseResidue(0))));

    // Delta caps, closed form and by brute force over mu.
    const Integer caps[] = {10, 9, 8, 9};
    for (Integer r = 0; r < 4; ++r) {
        Integer brute = -1;
        for (Integer mu = 0; mu <= kDefaultMuCap; ++mu) {
            const Integer num = mu - 3 * r * (4 - r);
            if (num >= 0 && num % 8 == 0) brute = std::max(brute, num / 8);
        }
        const Integer closed = delta_cap(CaseResidue(r));
        add("delta cap for r=" + std::to_string(r) + " (closed form, brute force over mu <= 81)",
            "jacobi-delta-cap", std::to_string(caps[r]) + "," + std::to_string(caps[r]),
            std::to_string(closed) + "," + std::to_string(brute));
    }

    // Character enumerations.
    add("connected characters of degree 20, length 4", "numerical-character", "{(8,7,6,5), (7,7,6,6)}",
        detail::join_characters(enumerate_connected(20, 4)));
    add("connected characters of degree 21, length 4", "numerical-character", "{(8,7,6,6), (7,7,7,6)}",
        detail::join_characters(enumerate_connected(21, 4)));
    add("connected characters of degree 23, length 4", "numerical-character", "{(8,8,7,6), (8,7,7,7)}",
        detail::join_characters(enumerate_connected(23, 4)));
    add("maximal character of degree 23, length 4", "numerical-character", "(8,8,7,6)",
        max_connected_character(23, 4).character.to_string());
    {
        const std::pair<Integer, Integer> gaps[] = {{0, 2}, {1, 1}, {3, 1}};
        for (auto [r, gap] : gaps) {
            std::string computed = std::to_string(gap);
            for (Integer k = 4; k <= 10; ++k) {
                const auto cs = enumerate_connected(4 * k + r, 4);
                const Integer g = cs.size() == 2 ? genus(cs[0]) - genus(cs[1]) : -1;
                const Integer gmax = max_connected_character(4 * k + r, 4).genus;
                if (cs.size() != 2 || std::abs(g) != gap || gmax != max_genus(4 * k + r, 4)) {
                    computed = "fails at k=" + std::to_string(k);
                    break;
                }
            }
            add("genus gap between the two characters of degree 4k+" + std::to_string(r) + ", k in [4,10]",
                "character-gap", std::to_string(gap), computed);
        }
    }
    add("G(20,4)", "maximal-genus", "51", std::to_string(max_genus(20, 4)));
    add("G(23,4) via closed form and maximal character", "maximal-genus", "66,66",
        std::to_string(max_genus_quartic(23)) + "," + std::to_string(max_connected_character(23, 4).genus));

    // Speciality c-caps at the least admissible e.
    const Integer k_probe = 5;
    const std::pair<Integer, Integer> c_caps[] = {{0, 6}, {1, 7}, {2, 8}, {3, 9}};
    for (auto [r, off] : c_caps) {
        add("c <= k+" + std::to_string(off) + " for d=4k+" + std::to_string(r) + ", e = k-2", "c-cap-speciality-bound",
            std::to_string(off), std::to_string(c_cap_speciality(4 * k_probe + r, k_probe - 2, 4) - k_probe));
    }
    add("c <= k+9 for d=4k, e = k-3", "c-cap-speciality-bound", "9",
        std::to_string(c_cap_speciality(4 * k_probe, k_probe - 3, 4) - k_probe));

    // Upper bounds on h^2 at delta = 10 in the e = k-3 branch.
    add("h^2 upper with c-k=9, gap 8, credit 2", "cohomology-upper", "54", std::to_string(h2_upper(9, 0, 8, 2)));
    add("h^2 upper with c-k=3, gap 8, credit 0", "cohomology-upper", "24", std::to_string(h2_upper(3, 0, 8, 0)));

    // Monotonicity of the lower bounds.
    {
        std::string computed = "increasing";
        for (auto f : {BoundFamily::Rho, BoundFamily::Lambda, BoundFamily::Phi}) {
            for (Integer r = 0; r < 4; ++r) {
                const auto m = check_monotone(f, CaseResidue(r), 10, 4, 60);
                if (!m.increasing) computed = std::string(to_string(f)) + " fails for r=" + std::to_string(r);
            }
        }
        add("rho, lambda, phi increasing in k on [4,60] for delta in [0,10]", "lower-bound-monotone",
            "increasing", computed);
    }

    // Thresholds, per-case caps and the final bounds.
    for (auto a : {VanishingAssumption::GeometricGenusZero, VanishingAssumption::OmegaTwistVanishes}) {
        const Integer expected_threshold = a == VanishingAssumption::GeometricGenusZero ? 6 : 7;
        const DerivationTrace th = derive_theorem(a);
        for (const auto& c : th.cases) {
            for (const auto& b : c.branches) {
                add("threshold for d=4k+" + std::to_string(c.r) + " [" + b.label + "] under " +
                        std::string(to_string(a)),
                    "branch-contradiction", std::to_string(expected_threshold), std::to_string(b.threshold));
            }
            add("degree bound for d=4k+" + std::to_string(c.r) + " under " + std::string(to_string(a)),
                "case-bound", std::to_string(4 * (expected_threshold - 1) + c.r), std::to_string(c.final_bound));
        }
        add("final degree bound under " + std::string(to_string(a)), "theorem-bound",
            a == VanishingAssumption::GeometricGenusZero ? "23" : "27",
            th.final_bound ? std::to_string(*th.final_bound) : "none");

        const DerivationTrace replayed = trace_from_json(json::parse(trace_to_json(th).dump()));
        add("serialized trace under " + std::string(to_string(a)) + " replays without mismatch", "trace-replay",
            "0 mismatches of " + std::to_string(th.steps.size()),
            std::to_string(replay(replayed).size()) + " mismatches of " + std::to_string(replayed.steps.size()));
    }
    return rows;
}

inline ReportDocument cmd_verify(const VerifyOptions& opts = {}) {
    ReportDocument doc;
    doc.command = "verify";
    doc.params = {{"corrupt", opts.corrupt ? json(std::string(to_string(*opts.corrupt))) : json(nullptr)}};
    const auto rows = golden_suite(opts);
    json list = json::array();
    std::size_t passed = 0;
    for (const auto& r : rows) {
        list.push_back({{"claim", r.claim},
                        {"anchor", r.anchor},
                        {"expected", r.expected},
                        {"computed", r.computed},
                        {"pass", r.pass}});
        passed += r.pass ? 1 : 0;
    }
    doc.payload = {{"rows", list}, {"passed", passed}, {"total", rows.size()}};
    doc.verdict = {passed == rows.size(), std::to_string(passed) + "/" + std::to_string(rows.size()) + " checks pass"};
    return doc;
}

// ---------------------------------------------------------------------------
// Human rendering

inline std::string render_text(const ReportDocument& doc) {
    std::ostringstream os;
    const auto& p = doc.payload;
    if (doc.command == "chars") {
        os << "connected characters of degree " << doc.params["degree"] << ", length " << doc.params["sigma"]
           << "\n";
        for (const auto& c : p["characters"]) {
            os << "  " << std::left << std::setw(28) << c["entries"].dump() << " genus " << std::setw(6)
               << c["genus"].get<Integer>() << (c["maximal"].get<bool>() ? " maximal" : "") << "\n";
        }
        if (p.contains("note")) os << "  " << p["note"].get<std::string>() << "\n";
    } else if (doc.command == "genus") {
        os << std::right << std::setw(5) << "d" << std::setw(10) << "G(d,s)" << std::setw(12) << "char max"
           << "\n";
        for (const auto& r : p["rows"]) {
            os << std::setw(5) << r["d"].get<Integer>() << std::setw(10) << r["max_genus"].get<Integer>()
               << std::setw(12) << (r.contains("character_max_genus") ? r["character_max_genus"].dump() : "-");
            if (r.contains("jacobi_genus")) {
                os << "  jacobi " << r["jacobi_genus"].get<Integer>() << " delta " << r["delta"].get<Integer>();
            }
            os << "\n";
        }
        if (p.contains("note")) os << p["note"].get<std::string>() << "\n";
    } else if (doc.command == "poly") {
        os << doc.verdict.summary << "\n";
    } else if (doc.command == "bounds") {
        for (const auto& s : p["steps"]) {
            const Rational l = rational_from_json(s["lhs"]);
            const Rational r = rational_from_json(s["rhs"]);
            os << (s["verdict"].get<bool>() ? "  ok   " : "  FAIL ") << std::left << std::setw(8)
               << s["scope"].get<std::string>() << s["claim"].get<std::string>() << ": " << to_string(l) << " "
               << s["relation"].get<std::string>() << " " << to_string(r) << "\n";
        }
        for (const auto& c : p["cases"]) {
            os << "r=" << c["r"].get<Integer>() << ": k <= " << c["k_max"].get<Integer>() << ", d <= "
               << c["final_bound"].get<Integer>() << "\n";
        }
        for (const auto& n : p["notes"]) os << "note: " << n.get<std::string>() << "\n";
    } else if (doc.command == "verify") {
        for (const auto& r : p["rows"]) {
            os << (r["pass"].get<bool>() ? "  pass " : "  FAIL ") << r["claim"].get<std::string>() << "  [expected "
               << r["expected"].get<std::string>() << ", computed " << r["computed"].get<std::string>() << "]\n";
        }
    }
    os << (doc.verdict.ok ? "PASS" : "FAIL") << ": " << doc.verdict.summary << "\n";
    return os.str();
}

}  // namespace qbounds

#endif  // QBOUNDS_REPORT_HPP
