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
 * Maximal genus of space curves and the genus defect on a quartic.
 *
 * Two residues of d are in use and they are NOT interchangeable:
 *
 *   NotationResidue  r with d + r = 0 (mod s), 0 <= r < s   -- Halphen formula G(d,s)
 *   CaseResidue      r with d = 4k + r, 0 <= r <= 3         -- the case split on a quartic
 *
 * For s = 4 they are related by r_notation = (4 - r_case) mod 4, and the
 * product r(4 - r) is the same for both, which is why the two closed forms
 * of G(d,4) agree.
 */

#ifndef QBOUNDS_GENUS_FORMULAS_HPP
#define QBOUNDS_GENUS_FORMULAS_HPP

#include <string>
#include <string_view>

#include "qbounds/errors.hpp"
#include "qbounds/rational.hpp"

namespace qbounds {

/// r with d = 4k + r.
class CaseResidue {
public:
    constexpr explicit CaseResidue(Integer r) : value_(r) {
        if (r < 0 || r > 3) throw DomainError("case residue must lie in [0,3], got " + std::to_string(r));
    }
    static constexpr CaseResidue of_degree(Integer d) { return CaseResidue(((d % 4) + 4) % 4); }

    constexpr Integer value() const noexcept { return value_; }
    friend constexpr bool operator==(CaseResidue, CaseResidue) = default;

private:
    Integer value_;
};

/// r with d + r = 0 (mod s).
class NotationResidue {
public:
    constexpr NotationResidue(Integer d, Integer s) : value_(((s - d % s) % s + s) % s) {}
    constexpr Integer value() const noexcept { return value_; }

private:
    Integer value_;
};

struct GenusBudget {
    Integer d;
    Integer s;
    NotationResidue r_notation;
    CaseResidue r_case;
    Integer k;
};

inline GenusBudget make_genus_budget(Integer d, Integer s = 4) {
    if (d < 1 || s < 1) throw DomainError("genus budget needs d >= 1 and s >= 1");
    const auto rc = CaseResidue::of_degree(d);
    return {d, s, NotationResidue(d, s), rc, (d - rc.value()) / 4};
}

/// Halphen's G(d,s) = 1 + d(d + s^2 - 4s)/2s - r(s-1)(s-r)/2s, valid for d > s(s-1).
inline Integer max_genus(Integer d, Integer s) {
    if (s < 1 || d <= s * (s - 1)) {
        throw DomainError("max_genus(d,s) needs d > s(s-1); got d=" + std::to_string(d) +
                          ", s=" + std::to_string(s));
    }
    const Integer r = NotationResidue(d, s).value();
    const Rational g = Rational(1) + Rational(d * (d + s * s - 4 * s), 2 * s) -
                       Rational(r * (s - 1) * (s - r), 2 * s);
    return require_integral(g, "G(d,s)");
}

/// G(d,4) = 1 + (d^2 - 3r(4-r))/8 with d = 4k + r.
inline Integer max_genus_quartic(Integer d) {
    if (d <= 12) throw DomainError("max_genus_quartic needs d > 12, got " + std::to_string(d));
    const Integer r = CaseResidue::of_degree(d).value();
    return require_integral(Rational(1) + Rational(d * d - 3 * r * (4 - r), 8), "G(d,4)");
}

/// G(4k + r, 4) = 1 + 2k^2 + kr + (r/2)(r - 3).
inline Integer genus_by_remainder(Integer k, CaseResidue r) {
    const Integer rv = r.value();
    if (4 * k + rv <= 12) throw DomainError("genus_by_remainder needs 4k + r > 12");
    const Rational g = Rational(1 + 2 * k * k + k * rv) + Rational(rv, 2) * Rational(rv - 3);
    return require_integral(g, "G(4k+r,4)");
}

/// Sectional genus from the singularity invariant mu of the quartic: 1 + (d^2 - mu)/8.
inline Integer jacobi_genus(Integer d, Integer mu) {
    if (d < 1 || mu < 0) throw DomainError("jacobi_genus needs d >= 1 and mu >= 0");
    if (((d * d - mu) % 8 + 8) % 8 != 0) {
        throw DomainError("inconsistent (d, mu): d^2 != mu (mod 8) for d=" + std::to_string(d) +
                          ", mu=" + std::to_string(mu));
    }
    return 1 + (d * d - mu) / 8;
}

/// Default bound on mu for a quartic hypersurface with isolated singularities.
inline constexpr Integer kDefaultMuCap = 81;

/// Largest delta = G(d,4) - pi compatible with mu <= mu_cap, i.e. the largest
/// integer with 8*delta + 3r(4-r) <= mu_cap. Throws if no delta >= 0 fits.
inline Integer delta_cap(CaseResidue r, Integer mu_cap = kDefaultMuCap) {
    const Integer rv = r.value();
    const Integer slack = mu_cap - 3 * rv * (4 - rv);
    if (slack < 0) {
        throw DomainError("mu cap " + std::to_string(mu_cap) + " admits no genus defect for r=" +
                          std::to_string(rv));
    }
    return slack / 8;
}

enum class VanishingAssumption {
    GeometricGenusZero,  // p_g = 0
    OmegaTwistVanishes,  // h^0(omega_S(-1)) = 0
};

inline std::string_view to_string(VanishingAssumption a) {
    return a == VanishingAssumption::GeometricGenusZero ? "pg0" : "omega";
}

inline VanishingAssumption parse_assumption(std::string_view label) {
    if (label == "pg0") return VanishingAssumption::GeometricGenusZero;
    if (label == "omega") return VanishingAssumption::OmegaTwistVanishes;
    throw DomainError("unknown vanishing assumption '" + std::string(label) + "' (expected pg0 or omega)");
}

/// Degree cap for arithmetically Cohen-Macaulay surfaces on an irreducible
/// quartic. Stated results, not derived here.
constexpr Integer acm_degree_cap(VanishingAssumption a) {
    switch (a) {
        case VanishingAssumption::OmegaTwistVanishes: return 16;
        case VanishingAssumption::GeometricGenusZero: return 12;
    }
    throw DomainError("unknown vanishing assumption");
}

}  // namespace qbounds

#endif  // QBOUNDS_GENUS_FORMULAS_HPP
