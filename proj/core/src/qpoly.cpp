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

#include "qeuler/qpoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>

#include "qeuler/errors.hpp"
#include "zpoly.hpp"

namespace qeuler {

namespace {

// p == q^low * coeffs(q) / den with integer coeffs.
struct Scaled {
  detail::ZPoly coeffs;
  BigInt den;
  long low;
};

Scaled to_scaled(const QPoly& p) {
  Scaled out{{}, 1, p.low_degree()};
  for (const auto& t : p.terms()) {
    mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  out.coeffs.resize(static_cast<std::size_t>(p.degree() - out.low + 1));
  for (const auto& t : p.terms()) {
    auto& c = out.coeffs[static_cast<std::size_t>(t.exp - out.low)];
    mpz_divexact(c.get_mpz_t(), out.den.get_mpz_t(), t.coeff.get_den_mpz_t());
    c *= t.coeff.get_num();
  }
  return out;
}

QPoly from_scaled(const detail::ZPoly& z, const BigRat& scale, long low) {
  std::vector<QPoly::Term> terms;
  terms.reserve(z.size());
  const bool unit = scale == 1;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] == 0) continue;
    if (unit) {
      terms.push_back({low + static_cast<long>(i), BigRat(z[i])});
    } else {
      terms.push_back({low + static_cast<long>(i), BigRat(z[i]) * scale});
    }
  }
  return QPoly::from_terms(std::move(terms));
}

QPoly from_zpoly(const detail::ZPoly& z) { return from_scaled(z, 1, 0); }

// Schoolbook division over Q on dense coefficient vectors.
DivRem divrem_dense(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  const long db = b.degree();
  std::vector<BigRat> rem(static_cast<std::size_t>(a.degree() + 1));
  for (const auto& t : a.terms()) rem[static_cast<std::size_t>(t.exp)] = t.coeff;
  std::vector<BigRat> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const BigRat inv_lc = BigRat(1) / b.leading_coeff();
  const bool monic = b.leading_coeff() == 1;
  BigRat scratch;
  for (long i = a.degree(); i >= db; --i) {
    auto& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    BigRat c = monic ? top : BigRat(top * inv_lc);
    for (const auto& t : b.terms()) {
      auto& slot = rem[static_cast<std::size_t>(i - db + t.exp)];
      scratch = c * t.coeff;
      slot -= scratch;
    }
    quot[static_cast<std::size_t>(i - db)] = std::move(c);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {QPoly::from_dense(quot), QPoly::from_dense(rem)};
}

}  // namespace

QPoly::QPoly(long constant) {
  if (constant != 0) terms_.push_back({0, BigRat(constant)});
}

QPoly::QPoly(BigRat constant) {
  if (constant != 0) terms_.push_back({0, std::move(constant)});
}

QPoly QPoly::monomial(BigRat c, long exp) {
  if (exp < 0) throw DomainError("QPoly exponents must be non-negative");
  QPoly out;
  if (c != 0) out.terms_.push_back({exp, std::move(c)});
  return out;
}

QPoly QPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  QPoly out;
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (t.exp < 0) throw DomainError("QPoly exponents must be non-negative");
    if (!out.terms_.empty() && out.terms_.back().exp == t.exp) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (t.coeff != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

QPoly QPoly::from_dense(std::span<const BigRat> coeffs) {
  QPoly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) out.terms_.push_back({static_cast<long>(i), coeffs[i]});
  }
  return out;
}

const BigRat& QPoly::leading_coeff() const {
  if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return terms_.back().coeff;
}

BigRat QPoly::coeff(long exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, long e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) return *this = rhs;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      merged.push_back(*b++);
    } else {
      a->coeff += b->coeff;
      if (a->coeff != 0) merged.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) { return *this += -rhs; }

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = *this * rhs; }

QPoly& QPoly::operator*=(const BigRat& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial() || b.is_monomial()) {
    const QPoly& mono = a.is_monomial() ? a : b;
    const QPoly& other = a.is_monomial() ? b : a;
    QPoly out = other.shifted(mono.low_degree());
    return out *= mono.leading_coeff();
  }
  const Scaled sa = to_scaled(a);
  const Scaled sb = to_scaled(b);
  const BigRat scale = make_rat(1, sa.den * sb.den);
  return from_scaled(detail::mul(sa.coeffs, sb.coeffs), scale, sa.low + sb.low);
}

QPoly QPoly::shifted(long k) const {
  if (terms_.empty() || k == 0) return *this;
  if (k < -low_degree()) throw DomainError("shift would create a negative exponent");
  QPoly out = *this;
  for (auto& t : out.terms_) t.exp += k;
  return out;
}

QPoly QPoly::monic() const {
  if (terms_.empty() || terms_.back().coeff == 1) return *this;
  return *this * (BigRat(1) / terms_.back().coeff);
}

QPoly QPoly::pow(unsigned long e) const {
  QPoly result(1);
  QPoly base = *this;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

QPoly QPoly::substitute_power(long c) const {
  if (c < 1) throw DomainError("substitute_power needs c >= 1");
  QPoly out = *this;
  for (auto& t : out.terms_) t.exp *= c;
  return out;
}

BigRat QPoly::eval(const BigRat& q) const {
  BigRat acc = 0;
  long prev = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc *= qeuler::pow(q, prev - it->exp);
    acc += it->coeff;
    prev = it->exp;
  }
  if (!terms_.empty()) acc *= qeuler::pow(q, prev);
  return acc;
}

double QPoly::eval(double q) const {
  double acc = 0.0;
  long prev = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc *= std::pow(q, static_cast<double>(prev - it->exp));
    acc += it->coeff.get_d();
    prev = it->exp;
  }
  if (!terms_.empty()) acc *= std::pow(q, static_cast<double>(prev));
  return acc;
}

std::string QPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.exp == 0) {
      out += qeuler::to_string(t.coeff);
      continue;
    }
    if (t.coeff != 1) {
      out += qeuler::to_string(t.coeff);
      out += '*';
    }
    out += 'q';
    if (t.exp != 1) {
      out += '^';
      out += std::to_string(t.exp);
    }
  }
  return out;
}

DivRem divrem(const QPoly& a, const QPoly& b) { return divrem_dense(a, b); }

QPoly exact_div(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return {};
  if (b.is_monomial()) {
    if (a.low_degree() < b.low_degree()) throw DomainError("inexact polynomial division");
    QPoly out = a.shifted(-b.low_degree());
    return out *= BigRat(1) / b.leading_coeff();
  }
  const Scaled sa = to_scaled(a);
  Scaled sb = to_scaled(b);
  if (sa.low < sb.low) throw DomainError("inexact polynomial division");
  const BigInt cb = detail::content(sb.coeffs) * (sb.coeffs.back() < 0 ? -1 : 1);
  detail::make_primitive(sb.coeffs);
  // Pb is primitive, so Pb | Za over Q implies the quotient is integral.
  detail::ZPoly quot;
  if (!detail::divexact(sa.coeffs, sb.coeffs, quot)) {
    throw DomainError("inexact polynomial division");
  }
  // a/b = q^(la-lb) * (Za/Da) / (cb*Pb/Db)
  const BigRat scale = make_rat(sb.den, sa.den * cb);
  return from_scaled(quot, scale, sa.low - sb.low);
}

QPoly gcd_euclid(const QPoly& a, const QPoly& b) {
  QPoly x = a.monic();
  QPoly y = b.monic();
  while (!y.is_zero()) {
    QPoly r = divrem_dense(x, y).rem.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

GcdCofactors gcd_cofactors(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return {b.monic(), QPoly(), QPoly(b.leading_coeff())};
  if (b.is_zero()) return {a.monic(), QPoly(a.leading_coeff()), QPoly()};

  Scaled sa = to_scaled(a);
  Scaled sb = to_scaled(b);
  // a == q^la * (ca/Da) * Pa with Pa primitive, positive leading coefficient.
  BigInt ca = detail::content(sa.coeffs);
  if (sa.coeffs.back() < 0) ca = -ca;
  BigInt cb = detail::content(sb.coeffs);
  if (sb.coeffs.back() < 0) cb = -cb;
  detail::make_primitive(sa.coeffs);
  detail::make_primitive(sb.coeffs);
  const long low = std::min(sa.low, sb.low);

  detail::ZPoly g{1};
  detail::ZPoly cof_a = sa.coeffs;
  detail::ZPoly cof_b = sb.coeffs;
  if (sa.coeffs.size() > 1 && sb.coeffs.size() > 1) {
    if (auto heu = detail::heuristic_gcd(sa.coeffs, sb.coeffs)) {
      g = std::move(heu->gcd);
      cof_a = std::move(heu->cofactor_a);
      cof_b = std::move(heu->cofactor_b);
    } else {
      const QPoly pa = from_zpoly(sa.coeffs);
      const QPoly pb = from_zpoly(sb.coeffs);
      QPoly gq = gcd_euclid(pa, pb);
      QPoly g_low = gq.shifted(low);
      return {g_low, exact_div(a, g_low), exact_div(b, g_low)};
    }
  }
  const BigInt lead = g.back();
  QPoly monic_gcd = from_scaled(g, make_rat(1, lead), low);
  QPoly over_a = from_scaled(cof_a, make_rat(ca * lead, sa.den), sa.low - low);
  QPoly over_b = from_scaled(cof_b, make_rat(cb * lead, sb.den), sb.low - low);
  return {std::move(monic_gcd), std::move(over_a), std::move(over_b)};
}

QPoly gcd(const QPoly& a, const QPoly& b) { return gcd_cofactors(a, b).gcd; }

}  // namespace qeuler
