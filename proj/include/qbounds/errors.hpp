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

#ifndef QBOUNDS_ERRORS_HPP
#define QBOUNDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qbounds {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain on which a formula is stated.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A rational expression that must be integral was not (a residue convention mix-up).
class IntegralityError : public Error {
public:
    using Error::Error;
};

/// No numerical character exists for the requested (degree, length).
class NoCharacterError : public Error {
public:
    using Error::Error;
};

/// The case tables failed to produce a contradiction inside the search window.
class EncodingError : public Error {
public:
    using Error::Error;
};

}  // namespace qbounds

#endif  // QBOUNDS_ERRORS_HPP
