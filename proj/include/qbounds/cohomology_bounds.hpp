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
 * Lower bounds for h^2(I_S(k)) of a smooth surface S in P^4 of degree
 * d = 4k + r lying on an irreducible quartic, with sectional genus
 * pi = G(d,4) - delta.
 *
 * Riemann-Roch on S together with h^0(I_S(k)) = h^0(O_P4(k-4)) gives
 *
 *     h^2(I_S(k)) >= 2/3 k^3 + k^2 (r/2 - 1) + k (7/3 + r^2/2 - 2r - delta) - p_g
 *
 * and the three families below come from substituting a bound on p_g:
 *
 *     Rho     p_g = 0
 *     Lambda  p_g <= pi - d + 3   (hyperplane section linearly normal)
 *     Phi     p_g <= pi - d/2     (Clifford)
 *
 * Every value is an exact rational. No ceilings are taken even though h^2 is
 * an integer: the half-integral values of Phi for odd r are compared as is.
 */

#ifndef QBOUNDS_COHOMOLOGY_BOUNDS_HPP
#define QBOUNDS_COHOMOLOGY_BOUNDS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "qbounds/errors.hpp"
#include "qbounds/genus_formulas.hpp"
#include "qbounds/rational.hpp"

namespace qbounds {

struct SurfaceInvariants {
    Integer degree;
    Integer sectional_genus;  // pi
    Integer geometric_genus;  // p_g
    Integer irregularity;     // q

    /// Invariants of a surface of degree 4k + r with pi = G(4k + r, 4) - delta.
    static SurfaceInvariants from_genus_defect(Integer k, CaseResidue r, Integer delta, Integer p_g = 0,
                                               Integer q = 0) {
        if (k < 1) throw DomainError("k must be >= 1");
        if (delta < 0 || p_g < 0 || q < 0) throw DomainError("delta, p_g and q must be >= 0");
        return {4 * k + r.value(), genus_by_remainder(k, r) - delta, p_g, q};
    }
};

/// chi(O_S(k)) = d k(k+1)/2 - k(pi - 1) + 1 - q + p_g.
inline Integer euler_char_twist(const SurfaceInvariants& s, Integer k) {
    if (s.geometric_genus < 0 || s.irregularity < 0) throw DomainError("p_g and q must be >= 0");
    return s.degree * k * (k + 1) / 2 - k * (s.sectional_genus - 1) + 1 - s.irregularity + s.geometric_genus;
}

/// h^0(O_{P^n}(t)) = C(t + n, n), zero for t < 0.
inline Integer projective_space_sections(Integer n, Integer t) {
    if (n < 0) throw DomainError("projective space dimension must be >= 0");
    if (t < 0) return 0;
    // C(t+n, n) built incrementally; each partial product is itself a binomial.
    Integer c = 1;
    for (Integer i = 1; i <= n; ++i) c = c * (t + i) / i;
    return c;
}

enum class BoundFamily { Rho, Lambda, Phi, RiemannRoch };

inline std::string_view to_string(BoundFamily f) {
    switch (f) {
        case BoundFamily::Rho: return "rho";
        case BoundFamily::Lambda: return "lambda";
        case BoundFamily::Phi: return "phi";
        case BoundFamily::RiemannRoch: return "riemann-roch";
    }
    return "?";
}

inline BoundFamily parse_family(std::string_view s) {
    if (s == "rho") return BoundFamily::Rho;
    if (s == "lambda") return BoundFamily::Lambda;
    if (s == "phi") return BoundFamily::Phi;
    if (s == "riemann-roch") return BoundFamily::RiemannRoch;
    throw DomainError("unknown bound family '" + std::string(s) + "'");
}

/// value(k, delta, p_g) = k3 k^3 + k2 k^2 + k1 k + k0 + delta (dk k + d0) + pg p_g
struct BoundPolynomial {
    BoundFamily family;
    CaseResidue r;
    Rational k3, k2, k1, k0;
    Rational dk, d0;
    Rational pg;

    Rational operator()(Integer k, Integer delta, const Rational& p_g = Rational(0)) const {
        const Rational kk(k);
        return ((k3 * kk + k2) * kk + k1) * kk + k0 + Rational(delta) * (dk * kk + d0) + pg * p_g;
    }
};

/// The coefficient table of each family for residue r.
inline BoundPolynomial bound_polynomial(BoundFamily family, CaseResidue r) {
    const Rational rv(r.value());
    const Rational half(1, 2);
    const Rational lead(2, 3);
    switch (family) {
        case BoundFamily::Rho:
            return {family, r, lead, rv * half - 1, Rational(7, 3) + rv * rv * half - 2 * rv, 0, -1, 0, 0};
        case BoundFamily::RiemannRoch:
            return {family, r, lead, rv * half - 1, Rational(7, 3) + rv * rv * half - 2 * rv, 0, -1, 0, -1};
        case BoundFamily::Lambda:
            return {family, r, lead, rv * half - 3, Rational(19, 3) + rv * rv * half - 3 * rv,
                    -rv * (rv - 5) * half - 4, -1, 1, 0};
        case BoundFamily::Phi:
            return {family, r, lead, rv * half - 3, Rational(13, 3) + rv * rv * half - 3 * rv,
                    2 * rv - 1 - rv * rv * half, -1, 1, 0};
    }
    throw DomainError("unknown bound family");
}

/// Riemann-Roch lower bound on h^2(I_S(k)); needs d = 4k + r > 16.
inline Rational h2_lower_riemann_roch(Integer k, CaseResidue r, Integer delta, const Rational& p_g) {
    if (4 * k + r.value() <= 16) {
        throw DomainError("the Riemann-Roch lower bound needs degree 4k + r > 16, got " +
                          std::to_string(4 * k + r.value()));
    }
    return bound_polynomial(BoundFamily::RiemannRoch, r)(k, delta, p_g);
}

inline Rational rho(Integer k, Integer delta, CaseResidue r) {
    return bound_polynomial(BoundFamily::Rho, r)(k, delta);
}

inline Rational lambda(Integer k, Integer delta, CaseResidue r) {
    return bound_polynomial(BoundFamily::Lambda, r)(k, delta);
}

inline Rational phi(Integer k, Integer delta, CaseResidue r) {
    return bound_polynomial(BoundFamily::Phi, r)(k, delta);
}

/// Evaluates `family` at p_g = 0 (the only meaningful choice for RiemannRoch here).
inline Rational evaluate(BoundFamily family, Integer k, Integer delta, CaseResidue r) {
    return bound_polynomial(family, r)(k, delta);
}

enum class PgCapMode { Clifford, LinearNormal };

/// Upper bound on p_g when h^0(omega_S(-1)) = 0. Clifford mode floors pi - d/2.
inline Integer pg_cap(Integer pi, Integer d, PgCapMode mode) {
    if (d < 1) throw DomainError("pg_cap needs d >= 1");
    if (mode == PgCapMode::Clifford) return floor(Rational(pi) - Rational(d, 2));
    return pi - d + 3;
}

struct MonotoneCheck {
    bool increasing;
    /// First (k, delta) with value(k+1) <= value(k), sweeping delta outermost.
    std::optional<std::pair<Integer, Integer>> witness;
    /// min over the window of value(k+1) - value(k); unset for an empty window.
    std::optional<Rational> min_increment;
};

/// Checks family(k+1, delta, r) > family(k, delta, r) for delta in [0, delta_max]
/// and k in [k_lo, k_hi - 1].
inline MonotoneCheck check_monotone(BoundFamily family, CaseResidue r, Integer delta_max, Integer k_lo,
                                    Integer k_hi) {
    if (k_lo < 1) throw DomainError("check_monotone needs k_lo >= 1");
    const auto poly = bound_polynomial(family, r);
    MonotoneCheck out{true, std::nullopt, std::nullopt};
    for (Integer delta = 0; delta <= delta_max; ++delta) {
        for (Integer k = k_lo; k < k_hi; ++k) {
            const Rational step = poly(k + 1, delta) - poly(k, delta);
            if (!out.min_increment || step < *out.min_increment) out.min_increment = step;
            if (step <= 0 && out.increasing) {
                out.increasing = false;
                out.witness = std::pair{k, delta};
            }
        }
    }
    return out;
}

}  // namespace qbounds

#endif  // QBOUNDS_COHOMOLOGY_BOUNDS_HPP
