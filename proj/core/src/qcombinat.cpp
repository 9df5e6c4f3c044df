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

#include "qeuler/qcombinat.hpp"

#include <algorithm>
#include <vector>

#include "qeuler/errors.hpp"

namespace qeuler {

QPoly qbracket_poly(long k, long c) {
  if (c < 1) throw DomainError("q-number base exponent must be >= 1");
  if (k < 0) throw DomainError("qbracket_poly needs k >= 0");
  std::vector<QPoly::Term> terms;
  terms.reserve(static_cast<std::size_t>(k));
  for (long i = 0; i < k; ++i) terms.push_back({c * i, BigRat(1)});
  return QPoly::from_terms(std::move(terms));
}

QRatFunc qbracket(long n, long c) {
  if (c < 1) throw DomainError("q-number base exponent must be >= 1");
  if (n == 0) return {};
  if (n > 0 && n % c == 0) return QRatFunc(qbracket_poly(n / c, c));
  const QPoly one_minus_qc = QPoly(1) - QPoly::monomial(c);
  if (n > 0) return {QPoly(1) - QPoly::monomial(n), one_minus_qc};
  // 1 - q^n = (q^|n| - 1) / q^|n|
  return {QPoly::monomial(-n) - QPoly(1), one_minus_qc.shifted(-n)};
}

QPoly qfactorial(long m, long c) {
  if (m < 0) throw DomainError("qfactorial needs m >= 0");
  if (c < 1) throw DomainError("q-number base exponent must be >= 1");
  QPoly out(1);
  for (long k = 2; k <= m; ++k) out *= qbracket_poly(k, c);
  return out;
}

QPoly gauss_binom(long m, long k, long c) {
  if (c < 1) throw DomainError("base exponent c must be >= 1");
  if (k < 0 || k > m) return {};
  const long kk = std::min(k, m - k);
  // g_i = g_{i-1} (1 - q^(c(m-kk+i))) / (1 - q^(ci)); every g_i is a Gaussian binomial.
  std::vector<BigInt> g{BigInt(1)};
  for (long i = 1; i <= kk; ++i) {
    const auto up = static_cast<std::size_t>(c * (m - kk + i));
    const auto down = static_cast<std::size_t>(c * i);
    std::vector<BigInt> p(g.size() + up);
    for (std::size_t j = 0; j < g.size(); ++j) {
      p[j] += g[j];
      p[j + up] -= g[j];
    }
    // Divide by 1 - q^down: out_j = p_j + out_(j-down).
    const std::size_t len = p.size() - down;
    g.assign(len, BigInt(0));
    for (std::size_t j = 0; j < len; ++j) {
      g[j] = p[j];
      if (j >= down) g[j] += g[j - down];
    }
  }
  std::vector<BigRat> coeffs(g.begin(), g.end());
  return QPoly::from_dense(coeffs);
}

QRatFunc qpoch_monomial(int sign, long k, long c, long r) {
  if (sign != 1 && sign != -1) throw DomainError("Pochhammer sign must be +1 or -1");
  if (c < 1) throw DomainError("Pochhammer base exponent must be >= 1");
  if (r < 0) throw DomainError("Pochhammer length must be >= 0");
  QPoly num(1);
  long q_den = 0;
  const BigRat s(sign);
  for (long i = 0; i < r; ++i) {
    const long e = k + c * i;
    if (e >= 0) {
      num *= QPoly(1) - QPoly::monomial(s, e);
    } else {
      num *= QPoly::monomial(-e) - QPoly(s);
      q_den -= e;
    }
  }
  return {num, QPoly::monomial(q_den)};
}

}  // namespace qeuler
