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
 * Contradiction engine for surfaces S in P^4 of degree d = 4k + r on a
 * quartic hypersurface with isolated singularities.
 *
 * For the general hyperplane section C of S (a non projectively normal curve
 * on a quartic surface) the curve-level facts are encoded per residue r as a
 * table of branches. Each branch fixes an admissible interval of the genus
 * defect delta, a cap c <= k + u on the last nonvanishing h^1(I_C), the gap
 * g(chi(C)) - G(d,4) and a credit on the restriction cokernels. From these
 *
 *     h^2(I_S(k)) <= [ u * (delta + gap - credit) ]_+
 *
 * while the Riemann-Roch families give h^2(I_S(k)) >= lower(k, delta). The
 * first k at which lower > upper for every admissible delta is the branch
 * threshold; the case bound is k <= max(threshold) - 1.
 *
 * The curve-level facts are data with an anchor naming their origin; they
 * are not re-derived here.
 */

#ifndef QBOUNDS_BOUND_ENGINE_HPP
#define QBOUNDS_BOUND_ENGINE_HPP

#include <algorithm>
#include <cstddef>
#include <future>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbounds/cohomology_bounds.hpp"
#include "qbounds/errors.hpp"
#include "qbounds/genus_formulas.hpp"
#include "qbounds/rational.hpp"

namespace qbounds {

/// c <= d + e(1 - s) + s^2 - 4s for a smooth curve on a smooth surface of degree s.
inline Integer c_cap_speciality(Integer d, Integer e, Integer s) {
    if (s < 2) throw DomainError("c_cap_speciality needs s >= 2");
    return d + e * (1 - s) + s * s - 4 * s;
}

/// [(c - t) * (gap - prefix_credit)]_+, gap = g(chi(C)) - g(C).
inline Integer h2_upper(Integer c, Integer t, Integer gap, Integer prefix_credit) {
    const Integer v = (c - t) * (gap - prefix_credit);
    return v > 0 ? v : 0;
}

/// Where a c-cap comes from.
enum class CapSource {
    SpecialityBound,  // c_cap_speciality at the least admissible e
    Liaison,          // linkage by a complete intersection (4, k+1)
};

inline std::string_view to_string(CapSource s) {
    return s == CapSource::SpecialityBound ? "speciality-bound" : "liaison";
}

struct UpperAlternative {
    std::string label;
    Integer c_cap_offset;  // c <= k + c_cap_offset
    Integer prefix_credit;
    CapSource source;
};

struct CaseBranch {
    std::string label;
    std::string anchor;
    Integer delta_lo;
    Integer delta_hi;  // closed interval; empty when delta_lo > delta_hi
    std::vector<Integer> e_offsets;  // admissible e - k
    Integer char_gap;                // g(chi(C)) - G(d,4)
    /// The curve satisfies at least one of these; the upper bound is their max.
    std::vector<UpperAlternative> upper;
    BoundFamily lower_family;
    bool requires_linear_normality;

    bool vacuous() const noexcept { return delta_lo > delta_hi; }
    Integer min_e_offset() const { return *std::min_element(e_offsets.begin(), e_offsets.end()); }

    /// max over alternatives of h2_upper; independent of k.
    Integer upper_at(Integer delta) const {
        Integer best = 0;
        for (const auto& alt : upper) {
            best = std::max(best, h2_upper(alt.c_cap_offset, 0, delta + char_gap, alt.prefix_credit));
        }
        return best;
    }
};

struct SurfaceCase {
    CaseResidue r;
    VanishingAssumption assumption;
    Integer mu_cap;
    Integer validity_floor_k;  // least k the curve-level facts are stated for
    Integer table_delta_max;   // the facts assume delta <= this
    Integer delta_cap;         // from mu <= mu_cap
    std::vector<CaseBranch> branches;
};

inline BoundFamily lower_family_for(VanishingAssumption a, bool linearly_normal) {
    if (a == VanishingAssumption::GeometricGenusZero) return BoundFamily::Rho;
    return linearly_normal ? BoundFamily::Lambda : BoundFamily::Phi;
}

/// The branch structure for d = 4k + r under the given vanishing assumption.
inline SurfaceCase case_table(CaseResidue r, VanishingAssumption assumption, Integer mu_cap = kDefaultMuCap) {
    const Integer cap = delta_cap(r, mu_cap);
    const auto e_range = std::vector<Integer>{-2, -1, 0};
    SurfaceCase sc{r, assumption, mu_cap, 4, 0, cap, {}};
    switch (r.value()) {
        case 0:
            // Two connected characters of degree 4k, length 4; the non-maximal one
            // has genus G - 2, and delta >= 3. e in [k-3, k-1].
            sc.validity_floor_k = 5;
            sc.table_delta_max = 10;
            sc.branches.push_back(CaseBranch{
                "e = k-3",
                "d=4k: e = k-3 forces delta = 10, C linearly normal, c <= k+3 or r_{k+1} = 2",
                10, cap, {-3}, -2,
                {{"c <= k+3", 3, 0, CapSource::Liaison},
                 {"c <= k+9 and r_{k+1} = 2", 9, 2, CapSource::SpecialityBound}},
                lower_family_for(assumption, true), true});
            sc.branches.push_back(CaseBranch{
                "e >= k-2", "d=4k: e >= k-2, g(chi(C)) = G - 2, delta >= 3",
                3, cap, {-2, -1}, -2,
                {{"c <= k+6", 6, 0, CapSource::SpecialityBound}},
                lower_family_for(assumption, false), false});
            break;
        case 1:
            sc.table_delta_max = 9;
            sc.branches.push_back(CaseBranch{
                "e >= k-2", "d=4k+1: k-2 <= e <= k, g(chi(C)) = G - 1, delta >= 2",
                2, cap, e_range, -1,
                {{"c <= k+7", 7, 0, CapSource::SpecialityBound}},
                lower_family_for(assumption, false), false});
            break;
        case 2:
            // No character gap is available here; g(chi(C)) <= G is all we use.
            sc.table_delta_max = 8;
            sc.branches.push_back(CaseBranch{
                "e >= k-2", "d=4k+2: k-2 <= e <= k, g(chi(C)) <= G, c <= k+8",
                0, cap, e_range, 0,
                {{"c <= k+8", 8, 0, CapSource::SpecialityBound}},
                lower_family_for(assumption, false), false});
            break;
        case 3:
            sc.table_delta_max = 9;
            sc.branches.push_back(CaseBranch{
                "e >= k-2", "d=4k+3: k-2 <= e <= k, g(chi(C)) = G - 1, delta >= 2",
                2, cap, e_range, -1,
                {{"c <= k+9", 9, 0, CapSource::SpecialityBound}},
                lower_family_for(assumption, false), false});
            break;
    }
    return sc;
}

/// Search stops here; every genuine threshold is far below.
inline constexpr Integer kThresholdSearchLimit = 60;

/// True when lower(k, delta) > upper(delta) for every admissible delta.
inline bool branch_contradicts_at(const CaseBranch& branch, CaseResidue r, Integer k) {
    const auto poly = bound_polynomial(branch.lower_family, r);
    for (Integer delta = branch.delta_lo; delta <= branch.delta_hi; ++delta) {
        if (poly(k, delta) <= Rational(branch.upper_at(delta))) return false;
    }
    return true;
}

/// Smallest k >= validity_floor at which the branch is contradictory for every
/// admissible delta. A vacuous branch returns validity_floor.
inline Integer branch_threshold(const CaseBranch& branch, CaseResidue r, Integer validity_floor) {
    if (!branch.vacuous()) {
        const auto mono = check_monotone(branch.lower_family, r, branch.delta_hi, validity_floor,
                                         kThresholdSearchLimit);
        if (!mono.increasing) {
            throw EncodingError("branch '" + branch.label + "': " + std::string(to_string(branch.lower_family)) +
                                " is not increasing on the search window");
        }
    }
    for (Integer k = validity_floor; k <= kThresholdSearchLimit; ++k) {
        if (branch_contradicts_at(branch, r, k)) return k;
    }
    throw EncodingError("branch '" + branch.label + "' (r=" + std::to_string(r.value()) +
                        "): no contradiction for k <= " + std::to_string(kThresholdSearchLimit));
}

// ---------------------------------------------------------------------------
// Derivation traces

enum class Relation { Less, LessEqual, Equal, GreaterEqual, Greater, NotEqual };

inline std::string_view to_string(Relation rel) {
    switch (rel) {
        case Relation::Less: return "<";
        case Relation::LessEqual: return "<=";
        case Relation::Equal: return "=";
        case Relation::GreaterEqual: return ">=";
        case Relation::Greater: return ">";
        case Relation::NotEqual: return "!=";
    }
    return "?";
}

inline Relation parse_relation(std::string_view s) {
    for (auto rel : {Relation::Less, Relation::LessEqual, Relation::Equal, Relation::GreaterEqual,
                     Relation::Greater, Relation::NotEqual}) {
        if (to_string(rel) == s) return rel;
    }
    throw DomainError("unknown relation '" + std::string(s) + "'");
}

inline bool holds(Relation rel, const Rational& lhs, const Rational& rhs) {
    switch (rel) {
        case Relation::Less: return lhs < rhs;
        case Relation::LessEqual: return lhs <= rhs;
        case Relation::Equal: return lhs == rhs;
        case Relation::GreaterEqual: return lhs >= rhs;
        case Relation::Greater: return lhs > rhs;
        case Relation::NotEqual: return lhs != rhs;
    }
    return false;
}

struct TraceStep {
    std::string scope;  // e.g. "r=0" or "theorem"
    std::string claim;
    std::string anchor;
    Rational lhs;
    Rational rhs;
    Relation relation;
    bool verdict;
};

struct BranchSummary {
    std::string label;
    BoundFamily lower_family;
    Integer delta_lo;
    Integer delta_hi;
    Integer threshold;
};

struct CaseSummary {
    Integer r;
    Integer validity_floor_k;
    std::vector<BranchSummary> branches;
    Integer k_max;
    Integer degree_bound;  // non-aCM bound 4 k_max + r
    Integer acm_cap;
    Integer final_bound;   // max(degree_bound, acm_cap)
};

struct DerivationTrace {
    std::string subject;
    VanishingAssumption assumption;
    Integer mu_cap;
    std::vector<TraceStep> steps;
    std::vector<std::string> notes;
    std::vector<CaseSummary> cases;
    std::optional<Integer> k_max;
    /// Unset whenever any step failed.
    std::optional<Integer> final_bound;

    bool all_steps_hold() const {
        return std::all_of(steps.begin(), steps.end(), [](const TraceStep& s) { return s.verdict; });
    }
};

/// Indices of steps whose recorded verdict disagrees with a fresh comparison.
inline std::vector<std::size_t> replay(const DerivationTrace& trace) {
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        if (holds(s.relation, s.lhs, s.rhs) != s.verdict) bad.push_back(i);
    }
    return bad;
}

namespace detail {

class TraceRecorder {
public:
    TraceRecorder(DerivationTrace& trace, std::string scope) : trace_(trace), scope_(std::move(scope)) {}

    bool check(std::string claim, std::string anchor, const Rational& lhs, Relation rel, const Rational& rhs) {
        const bool v = holds(rel, lhs, rhs);
        trace_.steps.push_back({scope_, std::move(claim), std::move(anchor), lhs, rhs, rel, v});
        return v;
    }

private:
    DerivationTrace& trace_;
    std::string scope_;
};

inline std::string delta_claim(std::string_view what, Integer k, Integer delta) {
    return std::string(what) + " at k=" + std::to_string(k) + ", delta=" + std::to_string(delta);
}

}  // namespace detail

/// Replays the contradiction argument for d = 4k + r.
inline DerivationTrace derive_case(CaseResidue r, VanishingAssumption assumption,
                                   Integer mu_cap = kDefaultMuCap) {
    const SurfaceCase table = case_table(r, assumption, mu_cap);
    const std::string scope = "r=" + std::to_string(r.value());
    DerivationTrace trace{"d = 4k + " + std::to_string(r.value()) + " under " + std::string(to_string(assumption)),
                          assumption, mu_cap, {}, {}, {}, std::nullopt, std::nullopt};
    detail::TraceRecorder rec(trace, scope);

    rec.check("delta cap from mu <= " + std::to_string(mu_cap) + " lies where the curve-level table applies",
              "jacobi-delta-cap", table.delta_cap, Relation::LessEqual, table.table_delta_max);

    CaseSummary summary{r.value(), table.validity_floor_k, {}, 0, 0, acm_degree_cap(assumption), 0};
    Integer k_max = table.validity_floor_k - 1;
    for (const auto& branch : table.branches) {
        const std::string b = "[" + branch.label + "] ";
        const std::string fam(to_string(branch.lower_family));

        // c-caps against the speciality bound at two values of k: the offset is k-independent.
        for (const auto& alt : branch.upper) {
            for (Integer k : {table.validity_floor_k, table.validity_floor_k + 1}) {
                const Integer from_e = c_cap_speciality(4 * k + r.value(), k + branch.min_e_offset(), 4) - k;
                const auto rel = alt.source == CapSource::SpecialityBound ? Relation::Equal : Relation::LessEqual;
                rec.check(b + "c-cap offset of '" + alt.label + "' vs speciality bound at e = k" +
                              std::to_string(branch.min_e_offset()) + ", k=" + std::to_string(k),
                          std::string("c-cap-") + std::string(to_string(alt.source)), alt.c_cap_offset, rel,
                          from_e);
            }
        }

        if (branch.vacuous()) {
            rec.check(b + "no admissible delta: interval is empty", "jacobi-delta-cap", branch.delta_lo,
                      Relation::Greater, branch.delta_hi);
            trace.notes.push_back(scope + " " + b + "vacuous under mu cap " + std::to_string(mu_cap));
            summary.branches.push_back(
                {branch.label, branch.lower_family, branch.delta_lo, branch.delta_hi, table.validity_floor_k});
            continue;
        }

        const auto mono =
            check_monotone(branch.lower_family, r, branch.delta_hi, table.validity_floor_k, kThresholdSearchLimit);
        rec.check(b + "min increment of " + fam + " over k in [" + std::to_string(table.validity_floor_k) + "," +
                      std::to_string(kThresholdSearchLimit) + "], delta in [0," + std::to_string(branch.delta_hi) +
                      "]",
                  "lower-bound-monotone", mono.min_increment.value_or(Rational(0)), Relation::Greater, 0);

        const Integer threshold = branch_threshold(branch, r, table.validity_floor_k);
        const auto poly = bound_polynomial(branch.lower_family, r);

        Integer surviving = 0;
        for (Integer delta = branch.delta_lo; delta <= branch.delta_hi; ++delta) {
            const Rational low = poly(threshold, delta);
            const Integer up = branch.upper_at(delta);
            rec.check(b + detail::delta_claim(fam + " exceeds the h^2 upper bound", threshold, delta),
                      "branch-contradiction", low, Relation::Greater, up);
            if (low <= Rational(up)) ++surviving;
        }
        rec.check(b + "no integer delta in [" + std::to_string(branch.delta_lo) + "," +
                      std::to_string(branch.delta_hi) + "] survives at k=" + std::to_string(threshold),
                  "branch-contradiction", surviving, Relation::Equal, 0);

        if (threshold - 1 >= table.validity_floor_k) {
            // Tightness: one step below the threshold some delta is still consistent.
            std::optional<Integer> witness;
            for (Integer delta = branch.delta_lo; delta <= branch.delta_hi && !witness; ++delta) {
                if (poly(threshold - 1, delta) <= Rational(branch.upper_at(delta))) witness = delta;
            }
            const Integer wd = witness.value_or(branch.delta_lo);
            rec.check(b + detail::delta_claim(fam + " does not exceed the upper bound", threshold - 1, wd),
                      "threshold-tightness", poly(threshold - 1, wd), Relation::LessEqual, branch.upper_at(wd));
        } else {
            trace.notes.push_back(scope + " " + b + "contradiction already at the validity floor k=" +
                                  std::to_string(threshold));
        }

        summary.branches.push_back({branch.label, branch.lower_family, branch.delta_lo, branch.delta_hi, threshold});
        k_max = std::max(k_max, threshold - 1);
    }

    summary.k_max = k_max;
    summary.degree_bound = 4 * k_max + r.value();
    rec.check("aCM surfaces satisfy d <= " + std::to_string(summary.acm_cap) +
                  ", below the non-aCM bound d <= " + std::to_string(summary.degree_bound),
              "acm-degree-cap", summary.acm_cap, Relation::LessEqual, summary.degree_bound);
    summary.final_bound = std::max(summary.degree_bound, summary.acm_cap);

    trace.cases.push_back(summary);
    if (trace.all_steps_hold()) {
        trace.k_max = k_max;
        trace.final_bound = summary.final_bound;
    }
    return trace;
}

/// All four residues. `jobs` > 1 derives the cases concurrently.
inline DerivationTrace derive_theorem(VanishingAssumption assumption, Integer mu_cap = kDefaultMuCap,
                                      unsigned jobs = 1) {
    std::vector<DerivationTrace> per_case;
    if (jobs > 1) {
        std::vector<std::future<DerivationTrace>> futures;
        for (Integer r = 0; r < 4; ++r) {
            futures.push_back(std::async(std::launch::async,
                                         [=] { return derive_case(CaseResidue(r), assumption, mu_cap); }));
        }
        for (auto& f : futures) per_case.push_back(f.get());
    } else {
        for (Integer r = 0; r < 4; ++r) per_case.push_back(derive_case(CaseResidue(r), assumption, mu_cap));
    }

    DerivationTrace trace{"all residues under " + std::string(to_string(assumption)),
                          assumption, mu_cap, {}, {}, {}, std::nullopt, std::nullopt};
    for (auto& c : per_case) {
        trace.steps.insert(trace.steps.end(), c.steps.begin(), c.steps.end());
        trace.notes.insert(trace.notes.end(), c.notes.begin(), c.notes.end());
        trace.cases.insert(trace.cases.end(), c.cases.begin(), c.cases.end());
    }

    detail::TraceRecorder rec(trace, "theorem");
    const Integer k0 = trace.cases.front().k_max;
    for (const auto& c : trace.cases) {
        rec.check("k_max for r=" + std::to_string(c.r) + " agrees with r=0", "uniform-k-bound", c.k_max,
                  Relation::Equal, k0);
    }
    if (assumption == VanishingAssumption::OmegaTwistVanishes) {
        trace.notes.push_back("a surface not of general type has h^0(omega_S(-1)) = 0, so the bound applies to it");
    } else {
        trace.notes.push_back("a rational surface has p_g = 0, so the bound applies to it");
    }

    if (trace.all_steps_hold()) {
        Integer bound = 0;
        Integer kmax = 0;
        for (const auto& c : trace.cases) {
            bound = std::max(bound, c.final_bound);
            kmax = std::max(kmax, c.k_max);
        }
        trace.k_max = kmax;
        trace.final_bound = bound;
    }
    return trace;
}

}  // namespace qbounds

#endif  // QBOUNDS_BOUND_ENGINE_HPP
