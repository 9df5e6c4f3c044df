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

#ifndef QEULER_BIGRAT_HPP
#define QEULER_BIGRAT_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qeuler {

// GMP keeps mpq_class canonical (positive denominator, reduced, 0 == 0/1)
// after every arithmetic operation; values built from raw parts must go
// through make_rat().
using BigInt = mpz_class;
using BigRat = mpq_class;

BigRat make_rat(const BigInt& num, const BigInt& den);

/// "p" for integers, "p/r" otherwise.
std::string to_string(const BigRat& v);
std::string to_string(const BigInt& v);

/// Accepts "p", "-p", "p/r". Throws ParseError on anything else or r == 0.
BigRat parse_rat(std::string_view text);

BigInt binomial(long n, long k);

/// base^exp with 0^0 = 1; negative exp requires base != 0.
BigRat pow(const BigRat& base, long exp);

double to_double(const BigRat& v);

}  // namespace qeuler

#endif  // QEULER_BIGRAT_HPP
