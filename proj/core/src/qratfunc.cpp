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

#include "qeuler/qratfunc.hpp"

#include "qeuler/errors.hpp"

namespace qeuler {

QRatFunc::QRatFunc(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  GcdCofactors g = gcd_cofactors(num, den);
  const BigRat inv_lc = BigRat(1) / g.b_over_gcd.leading_coeff();
  num_ = std::move(g.a_over_gcd) * inv_lc;
  den_ = std::move(g.b_over_gcd) * inv_lc;
}

QRatFunc QRatFunc::monomial(BigRat c, long k) {
  if (k >= 0) return QRatFunc(QPoly::monomial(std::move(c), k));
  if (c == 0) return {};
  return {Raw{}, QPoly(std::move(c)), QPoly::monomial(-k)};
}

QRatFunc QRatFunc::operator-() const { return {Raw{}, -num_, den_}; }

QRatFunc& QRatFunc::operator+=(const QRatFunc& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    if (den_.is_constant()) {
      num_ += rhs.num_;
      return *this;
    }
    return *this = QRatFunc(num_ + rhs.num_, den_);
  }
  const GcdCofactors g = gcd_cofactors(den_, rhs.den_);
  QPoly num = num_ * g.b_over_gcd + rhs.num_ * g.a_over_gcd;
  QPoly den = den_ * g.b_over_gcd;
  return *this = QRatFunc(num, den);
}

QRatFunc& QRatFunc::operator-=(const QRatFunc& rhs) { return *this += -rhs; }

QRatFunc& QRatFunc::operator*=(const QRatFunc& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = QRatFunc();
  if (den_.is_constant() && rhs.den_.is_constant()) {
    num_ *= rhs.num_;
    return *this;
  }
  GcdCofactors left = gcd_cofactors(num_, rhs.den_);
  GcdCofactors right = gcd_cofactors(rhs.num_, den_);
  QPoly num = left.a_over_gcd * right.a_over_gcd;
  QPoly den = right.b_over_gcd * left.b_over_gcd;
  const BigRat inv_lc = BigRat(1) / den.leading_coeff();
  num_ = std::move(num) * inv_lc;
  den_ = std::move(den) * inv_lc;
  return *this;
}

QRatFunc& QRatFunc::operator/=(const QRatFunc& rhs) { return *this *= rhs.inverse(); }

QRatFunc QRatFunc::inverse() const {
  if (is_zero()) throw DomainError("inverse of the zero rational function");
  const BigRat inv_lc = BigRat(1) / num_.leading_coeff();
  return {Raw{}, den_ * inv_lc, num_ * inv_lc};
}

QRatFunc QRatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  // Powers of coprime polynomials stay coprime; a monic den stays monic.
  return {Raw{}, num_.pow(static_cast<unsigned long>(e)), den_.pow(static_cast<unsigned long>(e))};
}

QRatFunc QRatFunc::substitute_power(long c) const {
  return {Raw{}, num_.substitute_power(c), den_.substitute_power(c)};
}

BigRat QRatFunc::eval(const BigRat& q0) const {
  const BigRat d = den_.eval(q0);
  if (d == 0) {
    throw PoleError("rational function has a pole at q = " + qeuler::to_string(q0));
  }
  return num_.eval(q0) / d;
}

double QRatFunc::eval(double q0) const { return num_.eval(q0) / den_.eval(q0); }

std::string QRatFunc::to_string() const { return num_.to_string() + " / " + den_.to_string(); }

void RatFuncSum::add(const QRatFunc& term) {
  if (term.is_zero()) return;
  add(term.num(), term.den());
}

void RatFuncSum::add(QPoly num, const QPoly& den) { add_shifted(std::move(num), 0, den); }

void RatFuncSum::add_shifted(QPoly num, long q_exp, const QPoly& den) {
  if (den.is_zero()) throw DomainError("rational term with zero denominator");
  if (num.is_zero()) return;
  for (auto& g : groups_) {
    if (g.den != den) continue;
    if (q_exp < g.low) {
      g.num = g.num.shifted(g.low - q_exp);
      g.low = q_exp;
    }
    g.num += num.shifted(q_exp - g.low);
    return;
  }
  groups_.push_back({den, std::move(num), q_exp});
}

QRatFunc RatFuncSum::result() const {
  QPoly num;
  QPoly den;
  for (const auto& g : groups_) {
    if (g.num.is_zero()) continue;
    QPoly gnum = g.low > 0 ? g.num.shifted(g.low) : g.num;
    QPoly gden = g.low < 0 ? g.den.shifted(-g.low) : g.den;
    if (den.is_zero()) {
      num = std::move(gnum);
      den = std::move(gden);
      continue;
    }
    const GcdCofactors c = gcd_cofactors(den, gden);
    num = num * c.b_over_gcd + gnum * c.a_over_gcd;
    den *= c.b_over_gcd;
  }
  if (den.is_zero()) return {};
  return {num, den};
}

}  // namespace qeuler
