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

#ifndef QEULER_QRATFUNC_HPP
#define QEULER_QRATFUNC_HPP

#include <string>
#include <utility>
#include <vector>

#include "qeuler/bigrat.hpp"
#include "qeuler/qpoly.hpp"

namespace qeuler {

/// Element of Q(q) in canonical form: num and den coprime, den monic.
///
/// Because the form is unique, operator== decides mathematical equality.
/// Negative powers of q are ordinary rational functions (1 / q^k).
class QRatFunc {
 public:
  QRatFunc() : den_(1) {}
  QRatFunc(long constant) : num_(constant), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit QRatFunc(BigRat constant) : num_(std::move(constant)), den_(1) {}
  explicit QRatFunc(QPoly poly) : num_(std::move(poly)), den_(1) {}
  /// Reduces num/den; throws DomainError when den is zero.
  QRatFunc(const QPoly& num, const QPoly& den);

  /// c * q^k for any integer k.
  static QRatFunc monomial(BigRat c, long k);
  static QRatFunc monomial(long k) { return monomial(BigRat(1), k); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  QRatFunc operator-() const;
  QRatFunc& operator+=(const QRatFunc& rhs);
  QRatFunc& operator-=(const QRatFunc& rhs);
  QRatFunc& operator*=(const QRatFunc& rhs);
  QRatFunc& operator/=(const QRatFunc& rhs);

  friend QRatFunc operator+(QRatFunc a, const QRatFunc& b) { return a += b; }
  friend QRatFunc operator-(QRatFunc a, const QRatFunc& b) { return a -= b; }
  friend QRatFunc operator*(QRatFunc a, const QRatFunc& b) { return a *= b; }
  friend QRatFunc operator/(QRatFunc a, const QRatFunc& b) { return a /= b; }
  friend bool operator==(const QRatFunc&, const QRatFunc&) = default;

  QRatFunc inverse() const;
  /// Integer power; negative exponents invert (DomainError on zero).
  QRatFunc pow(long e) const;
  /// f(q^c), c >= 1.
  QRatFunc substitute_power(long c) const;

  /// Exact value at q0. Throws PoleError when q0 is a root of den.
  BigRat eval(const BigRat& q0) const;
  double eval(double q0) const;

  /// "num / den" in the canonical polynomial text form.
  std::string to_string() const;

 private:
  struct Raw {};
  QRatFunc(Raw, QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {}

  QPoly num_;
  QPoly den_;
};

/// Collects many rational terms and reduces once at the end. Terms that
/// share a denominator are summed as plain polynomials.
class RatFuncSum {
 public:
  void add(const QRatFunc& term);
  /// Adds num/den without reducing; den must be nonzero.
  void add(QPoly num, const QPoly& den);
  /// Adds q^q_exp * num / den for any integer q_exp.
  void add_shifted(QPoly num, long q_exp, const QPoly& den);
  QRatFunc result() const;

 private:
  struct Group {
    QPoly den;
    QPoly num;  // the group's value is q^low * num / den
    long low;
  };
  std::vector<Group> groups_;
};

}  // namespace qeuler

#endif  // QEULER_QRATFUNC_HPP
