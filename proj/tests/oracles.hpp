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

// Reference computations used only by the tests. Each one follows a route
// that shares nothing with the production path beyond BigRat arithmetic.

#ifndef QEULER_TESTS_ORACLES_HPP
#define QEULER_TESTS_ORACLES_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "qeuler/bigrat.hpp"
#include "qeuler/qpoly.hpp"
#include "qeuler/qratfunc.hpp"

namespace qeuler::oracle {

using Dense = std::vector<BigRat>;

inline Dense dense_of(const QPoly& p) {
  Dense out;
  if (p.is_zero()) return out;
  out.assign(static_cast<std::size_t>(p.degree()) + 1, BigRat(0));
  for (const auto& t : p.terms()) out[static_cast<std::size_t>(t.exp)] = t.coeff;
  return out;
}

inline Dense dense_add(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size(), BigRat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline Dense dense_shift(const Dense& a, std::size_t k) {
  if (a.empty()) return a;
  Dense out(k, BigRat(0));
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

// q-Pascal: C(m,k) = C(m-1,k-1) + q^k C(m-1,k), base q^c.
inline Dense pascal_gauss_binom(long m, long k, long c = 1) {
  if (k < 0 || k > m) return {};
  std::vector<std::vector<Dense>> t(static_cast<std::size_t>(m) + 1);
  for (long i = 0; i <= m; ++i) {
    auto& row = t[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(i) + 1);
    row[0] = Dense{BigRat(1)};
    row[static_cast<std::size_t>(i)] = Dense{BigRat(1)};
    for (long j = 1; j < i; ++j) {
      const auto& prev = t[static_cast<std::size_t>(i - 1)];
      row[static_cast<std::size_t>(j)] =
          dense_add(prev[static_cast<std::size_t>(j - 1)],
                    dense_shift(prev[static_cast<std::size_t>(j)], static_cast<std::size_t>(c * j)));
    }
  }
  return t[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
}

// Truncated power series in t with rational coefficients.
inline Dense series_mul(const Dense& a, const Dense& b, std::size_t len) {
  Dense out(len, BigRat(0));
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline Dense series_inverse(const Dense& a, std::size_t len) {
  Dense out(len, BigRat(0));
  out[0] = BigRat(1) / a[0];
  for (std::size_t k = 1; k < len; ++k) {
    BigRat acc = 0;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc += a[j] * out[k - j];
    out[k] = -acc / a[0];
  }
  return out;
}

// n! [t^n] (2/(e^t+1))^r e^{xt}
inline BigRat series_classical_euler(long n, long r, const BigRat& x) {
  const std::size_t len = static_cast<std::size_t>(n) + 1;
  Dense exp_t(len), exp_xt(len);
  BigRat fact = 1;
  for (std::size_t k = 0; k < len; ++k) {
    if (k > 0) fact *= static_cast<long>(k);
    exp_t[k] = BigRat(1) / fact;
    exp_xt[k] = pow(x, static_cast<long>(k)) / fact;
  }
  Dense denom = exp_t;
  denom[0] += 1;
  Dense base = series_inverse(denom, len);
  for (auto& v : base) v *= 2;
  Dense acc(len, BigRat(0));
  acc[0] = 1;
  for (long i = 0; i < r; ++i) acc = series_mul(acc, base, len);
  acc = series_mul(acc, exp_xt, len);
  return acc[static_cast<std::size_t>(n)] * fact;
}

inline BigRat qnum_at(long k, const BigRat& q0) {
  // (1 - q0^k) / (1 - q0), q0 != 1
  return (1 - pow(q0, k)) / (1 - q0);
}

// Direct nested loop over [0,a)^r of the alternating q-power sum at q = q0.
inline BigRat nested_s_sum_at(long n, long i, long h, long r, long a, long c, const BigRat& q0) {
  const BigRat qc = pow(q0, c);
  BigRat total = 0;
  std::vector<long> j(static_cast<std::size_t>(r), 0);
  while (true) {
    long sum = 0;
    long weighted = 0;
    for (long l = 1; l <= r; ++l) {
      sum += j[static_cast<std::size_t>(l - 1)];
      weighted += (h + n - l - i + 1) * j[static_cast<std::size_t>(l - 1)];
    }
    BigRat term = (sum % 2 == 0 ? 1 : -1) * pow(qc, weighted);
    term *= pow(qnum_at(sum, qc), i);
    total += term;
    long pos = 0;
    while (pos < r && ++j[static_cast<std::size_t>(pos)] == a) j[static_cast<std::size_t>(pos++)] = 0;
    if (pos == r) break;
  }
  return total;
}

inline double qnum_ld(double x, double q) { return (1.0 - std::pow(q, x)) / (1.0 - q); }

// Plain r-fold truncation of the defining series, long double, no compensation.
inline long double direct_multisum(long n, long h, long r, double x, double q, long M) {
  long double total = 0;
  std::vector<long> m(static_cast<std::size_t>(r), 0);
  while (true) {
    long s = 0;
    long double w = 1;
    for (long j = 1; j <= r; ++j) {
      const long mj = m[static_cast<std::size_t>(j - 1)];
      s += mj;
      w *= std::pow(static_cast<long double>(q), static_cast<long double>((h - j + 1) * mj));
    }
    const long double br = (1 - std::pow(static_cast<long double>(q), static_cast<long double>(s) + x)) / (1 - q);
    total += (s % 2 == 0 ? 1 : -1) * w * std::pow(br, static_cast<long double>(n));
    long pos = 0;
    while (pos < r && ++m[static_cast<std::size_t>(pos)] == M) m[static_cast<std::size_t>(pos++)] = 0;
    if (pos == r) break;
  }
  return total * std::pow(static_cast<long double>(1 + q), static_cast<long double>(r));
}

inline QPoly random_poly(std::mt19937_64& rng, long max_deg, long coeff_bound) {
  std::uniform_int_distribution<long> deg(0, max_deg);
  std::uniform_int_distribution<long> co(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<QPoly::Term> terms;
  const long d = deg(rng);
  for (long e = 0; e <= d; ++e) {
    if (rng() % 3 == 0) continue;
    terms.push_back({e, make_rat(co(rng), den(rng))});
  }
  return QPoly::from_terms(std::move(terms));
}

inline BigRat random_rat(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return make_rat(num(rng), den(rng));
}

}  // namespace qeuler::oracle

#endif  // QEULER_TESTS_ORACLES_HPP
