// Copyright 2026 The qeuler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QEULER_ERRORS_HPP
#define QEULER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qeuler {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation of a reduced rational function at a zero of its denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A series form was requested outside the region where its terms decay
/// geometrically (h < r).
class ConvergenceDomainError : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside the domain of the requested function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The symmetry identities require both moduli to be odd.
class ParityError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qeuler

#endif  // QEULER_ERRORS_HPP
