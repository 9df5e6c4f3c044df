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

#ifndef QEULER_QCOMBINAT_HPP
#define QEULER_QCOMBINAT_HPP

#include "qeuler/qpoly.hpp"
#include "qeuler/qratfunc.hpp"

namespace qeuler {

/// (1 - q^n) / (1 - q^c), i.e. the q-number [n/c] in base q^c. Any integer n.
QRatFunc qbracket(long n, long c = 1);

/// Numerator polynomial of qbracket(c*k, c): 1 + q^c + ... + q^(c(k-1)), k >= 0.
QPoly qbracket_poly(long k, long c = 1);

/// [1]_{q^c} [2]_{q^c} ... [m]_{q^c}; [0]! = 1.
QPoly qfactorial(long m, long c = 1);

/// Gaussian binomial coefficient in base q^c; zero when k > m or k < 0.
QPoly gauss_binom(long m, long k, long c = 1);

/// (sign * q^k ; q^c)_r = prod_{i<r} (1 - sign * q^(k + c*i)), sign = +-1.
QRatFunc qpoch_monomial(int sign, long k, long c, long r);

}  // namespace qeuler

#endif  // QEULER_QCOMBINAT_HPP
