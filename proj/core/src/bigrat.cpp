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

#include "qeuler/bigrat.hpp"

#include <cctype>

#include "qeuler/errors.hpp"

namespace qeuler {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRat& v) { return v.get_str(10); }

std::string to_string(const BigInt& v) { return v.get_str(10); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

BigInt parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

BigRat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num_part = text.substr(0, slash);
  if (!is_integer_literal(num_part)) {
    throw ParseError("invalid rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return BigRat(parse_int(num_part));
  const auto den_part = text.substr(slash + 1);
  if (!is_integer_literal(den_part)) {
    throw ParseError("invalid rational '" + std::string(text) + "'");
  }
  const BigInt den = parse_int(den_part);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rat(parse_int(num_part), den);
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigRat pow(const BigRat& base, long exp) {
  if (exp == 0) return 1;
  if (exp < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    return pow(BigRat(1) / base, -exp);
  }
  BigRat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

double to_double(const BigRat& v) { return v.get_d(); }

}  // namespace qeuler
