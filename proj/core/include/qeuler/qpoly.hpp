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

#ifndef QEULER_QPOLY_HPP
#define QEULER_QPOLY_HPP

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qeuler/bigrat.hpp"

namespace qeuler {

/// Degree reported for the zero polynomial.
inline constexpr long kZeroDegree = std::numeric_limits<long>::min();

/// Sparse univariate polynomial in q with exact rational coefficients.
///
/// Terms are kept sorted by ascending exponent with no zero coefficients, so
/// two polynomials are equal exactly when their term lists are.
class QPoly {
 public:
  struct Term {
    long exp;
    BigRat coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  QPoly() = default;
  QPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit QPoly(BigRat constant);

  /// c * q^exp, exp >= 0.
  static QPoly monomial(BigRat c, long exp);
  static QPoly monomial(long exp) { return monomial(BigRat(1), exp); }
  /// Sorts, merges duplicate exponents and drops zeros.
  static QPoly from_terms(std::vector<Term> terms);
  /// coeffs[i] is the coefficient of q^i.
  static QPoly from_dense(std::span<const BigRat> coeffs);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  long degree() const { return terms_.empty() ? kZeroDegree : terms_.back().exp; }
  /// Smallest exponent with a nonzero coefficient; kZeroDegree for zero.
  long low_degree() const { return terms_.empty() ? kZeroDegree : terms_.front().exp; }
  const BigRat& leading_coeff() const;
  BigRat coeff(long exp) const;
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  QPoly& operator*=(const BigRat& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const BigRat& c) { return a *= c; }
  friend QPoly operator*(const BigRat& c, QPoly a) { return a *= c; }
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// this * q^k. Requires k >= -low_degree() unless the polynomial is zero.
  QPoly shifted(long k) const;
  /// Divides by the leading coefficient; zero stays zero.
  QPoly monic() const;
  QPoly pow(unsigned long e) const;
  /// p(q^c) for c >= 1.
  QPoly substitute_power(long c) const;

  BigRat eval(const BigRat& q) const;
  double eval(double q) const;

  /// "c0 + c1*q + c2*q^2 + ..."; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

struct DivRem {
  QPoly quot;
  QPoly rem;
};

/// Euclidean division over the rationals. Throws DomainError when b is zero.
DivRem divrem(const QPoly& a, const QPoly& b);

/// a / b, throwing DomainError unless b divides a exactly.
QPoly exact_div(const QPoly& a, const QPoly& b);

/// Monic greatest common divisor over Q; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

struct GcdCofactors {
  QPoly gcd;  // monic
  QPoly a_over_gcd;
  QPoly b_over_gcd;
};

/// gcd() together with the exact quotients a/gcd and b/gcd.
GcdCofactors gcd_cofactors(const QPoly& a, const QPoly& b);

/// Reference Euclidean gcd over Q (monic remainder sequence). Slower than
/// gcd() but independent of its heuristic path.
QPoly gcd_euclid(const QPoly& a, const QPoly& b);

}  // namespace qeuler

#endif  // QEULER_QPOLY_HPP
