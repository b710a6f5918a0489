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

#ifndef QBOUNDS_RATIONAL_HPP
#define QBOUNDS_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

#include "qbounds/errors.hpp"

namespace qbounds {

using Integer = std::int64_t;

/// Exact rational number. Every quantity in the library stays inside
/// |x| < 2^40 for the parameter ranges it accepts, so 64-bit limbs suffice.
using Rational = boost::rational<Integer>;

inline bool is_integral(const Rational& x) { return x.denominator() == 1; }

/// Returns x as an integer; throws IntegralityError if x has a fractional part.
/// `what` names the quantity in the error message.
inline Integer require_integral(const Rational& x, const char* what) {
    if (!is_integral(x)) {
        throw IntegralityError(std::string(what) + " is not an integer: " + std::to_string(x.numerator()) +
                               "/" + std::to_string(x.denominator()));
    }
    return x.numerator();
}

/// Largest integer <= x.
inline Integer floor(const Rational& x) {
    Integer q = x.numerator() / x.denominator();
    if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
    return q;
}

/// "p/q" or "p" when integral.
inline std::string to_string(const Rational& x) {
    if (is_integral(x)) return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

}  // namespace qbounds

#endif  // QBOUNDS_RATIONAL_HPP
