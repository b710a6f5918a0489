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
 * Numerical characters of zero-dimensional subschemes of the projective plane.
 *
 * A character is a sequence n_0 >= n_1 >= ... >= n_{s-1} >= s (s is the
 * length, i.e. the least degree of a plane curve through the points). It
 * determines the Hilbert function of the point set:
 *
 *     degree     d      = sum_i (n_i - i)
 *     deficiency h(n)   = h^1(I(n)) = sum_i [ (n_i - n - 1)_+ - (i - n - 1)_+ ]
 *     genus      g      = sum_{m >= 1} h(m)
 *
 * The characters of integral space curves are connected: n_i - n_{i+1} <= 1.
 */

#ifndef QBOUNDS_CHARACTERS_HPP
#define QBOUNDS_CHARACTERS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qbounds/errors.hpp"
#include "qbounds/rational.hpp"

namespace qbounds {

/// (x)_+ on all integers.
constexpr Integer positive_part(Integer x) noexcept { return x > 0 ? x : 0; }

class NumericalCharacter {
public:
    /// Throws DomainError unless the entries are non-increasing, non-empty and
    /// the last entry is at least the length.
    explicit NumericalCharacter(std::vector<Integer> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw DomainError("numerical character must have length >= 1");
        for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
            if (entries_[i] < entries_[i + 1]) {
                throw DomainError("numerical character must be non-increasing: " + to_string());
            }
        }
        if (entries_.back() < length()) {
            throw DomainError("last entry of a numerical character must be >= its length: " + to_string());
        }
    }

    NumericalCharacter(std::initializer_list<Integer> entries)
        : NumericalCharacter(std::vector<Integer>(entries)) {}

    std::span<const Integer> entries() const noexcept { return entries_; }

    /// The length sigma.
    Integer length() const noexcept { return static_cast<Integer>(entries_.size()); }

    Integer front() const noexcept { return entries_.front(); }
    Integer operator[](std::size_t i) const noexcept { return entries_[i]; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(entries_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const NumericalCharacter&, const NumericalCharacter&) = default;
    friend auto operator<=>(const NumericalCharacter& a, const NumericalCharacter& b) {
        return a.entries_ <=> b.entries_;
    }

    friend std::ostream& operator<<(std::ostream& os, const NumericalCharacter& c) {
        return os << c.to_string();
    }

private:
    std::vector<Integer> entries_;
};

inline Integer degree(const NumericalCharacter& chi) {
    Integer d = 0;
    for (Integer i = 0; i < chi.length(); ++i) d += chi[static_cast<std::size_t>(i)] - i;
    return d;
}

/// h_chi(n) = h^1(I_Gamma(n)). Zero for n >= n_0 - 1.
inline Integer h_deficiency(const NumericalCharacter& chi, Integer n) {
    if (n < 0) throw DomainError("h_deficiency is defined for n >= 0, got " + std::to_string(n));
    Integer h = 0;
    for (Integer i = 0; i < chi.length(); ++i) {
        h += positive_part(chi[static_cast<std::size_t>(i)] - n - 1) - positive_part(i - n - 1);
    }
    return h;
}

namespace detail {
// sum_{m >= 1} (x - m)_+ = T(x - 1), with T(y) = y(y+1)/2 for y >= 0.
constexpr Integer tail_sum(Integer x) noexcept {
    const Integer y = x - 1;
    return y > 0 ? y * (y + 1) / 2 : 0;
}
}  // namespace detail

/// g(chi) = sum_{m>=1} h_chi(m), summed per entry in closed form:
/// each entry contributes sum_{m>=1} (n_i - 1 - m)_+ - (i - 1 - m)_+.
inline Integer genus(const NumericalCharacter& chi) {
    Integer g = 0;
    for (Integer i = 0; i < chi.length(); ++i) {
        g += detail::tail_sum(chi[static_cast<std::size_t>(i)] - 1) - detail::tail_sum(i - 1);
    }
    return g;
}

inline bool is_connected(const NumericalCharacter& chi) {
    for (std::size_t i = 0; i + 1 < chi.entries().size(); ++i) {
        if (chi[i] - chi[i + 1] > 1) return false;
    }
    return true;
}

/// Enumeration works over difference vectors in {0,1}^(sigma-1); past this
/// length the 2^(sigma-1) masks are no longer cheap.
inline constexpr Integer kMaxEnumerationLength = 24;

/// Every connected character of the given degree and length, in
/// lexicographically descending order. Empty when none exists.
inline std::vector<NumericalCharacter> enumerate_connected(Integer d, Integer sigma) {
    if (d < 1 || sigma < 1) throw DomainError("enumerate_connected needs d >= 1 and sigma >= 1");
    if (sigma > kMaxEnumerationLength) {
        throw DomainError("enumerate_connected supports sigma <= " + std::to_string(kMaxEnumerationLength));
    }
    std::vector<NumericalCharacter> out;
    // With last entry L every entry is >= L, so d >= sigma*L - sigma(sigma-1)/2.
    const Integer offset = sigma * (sigma - 1) / 2;
    const Integer last_max = (d + offset) / sigma;
    const std::size_t masks = std::size_t{1} << (sigma - 1);
    std::vector<Integer> entries(static_cast<std::size_t>(sigma));
    for (Integer last = sigma; last <= last_max; ++last) {
        for (std::size_t mask = 0; mask < masks; ++mask) {
            // bit j set means n_j - n_{j+1} = 1
            Integer value = last;
            entries.back() = value;
            for (Integer j = sigma - 2; j >= 0; --j) {
                value += static_cast<Integer>((mask >> j) & 1U);
                entries[static_cast<std::size_t>(j)] = value;
            }
            Integer sum = 0;
            for (Integer e : entries) sum += e;
            if (sum - offset == d) out.emplace_back(entries);
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

struct MaximalCharacter {
    NumericalCharacter character;
    Integer genus;
    /// More than one character attains the maximal genus; `character` is then
    /// the lexicographically largest of them.
    bool tie;
};

/// The genus-maximal connected character of (d, sigma).
/// Throws NoCharacterError when no connected character exists.
inline MaximalCharacter max_connected_character(Integer d, Integer sigma) {
    const auto all = enumerate_connected(d, sigma);
    if (all.empty()) {
        throw NoCharacterError("no connected numerical character of degree " + std::to_string(d) +
                               " and length " + std::to_string(sigma));
    }
    // `all` is sorted descending, so the first maximum is the lexicographic largest.
    std::size_t best = 0;
    Integer best_genus = genus(all.front());
    bool tie = false;
    for (std::size_t i = 1; i < all.size(); ++i) {
        const Integer g = genus(all[i]);
        if (g > best_genus) {
            best = i;
            best_genus = g;
            tie = false;
        } else if (g == best_genus) {
            tie = true;
        }
    }
    return {all[best], best_genus, tie};
}

}  // namespace qbounds

#endif  // QBOUNDS_CHARACTERS_HPP
