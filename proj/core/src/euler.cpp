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

#include "qeuler/euler.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "qeuler/errors.hpp"
#include "qeuler/numeric.hpp"
#include "qeuler/qcombinat.hpp"

#include "cube_sum.hpp"

namespace qeuler {

namespace {

void check_numeric_args(long n, long h, long r, double x, double q) {
  if (n < 0 || r < 0) throw DomainError("n and r must be non-negative");
  if (!(q > 0.0 && q < 1.0)) throw DomainError("numeric q must lie in (0, 1)");
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("x must be a finite real >= 0");
  if (h < r) {
    throw ConvergenceDomainError("series form needs h >= r (got h = " + std::to_string(h) +
                                 ", r = " + std::to_string(r) + "); use the closed form");
  }
}

QPoly one_plus_qpow(long e) { return QPoly(1) + QPoly::monomial(e); }

}  // namespace

void validate(const EulerParams& p) {
  if (p.n < 0) throw DomainError("degree n must be >= 0");
  if (p.r < 0) throw DomainError("order r must be >= 0");
  if (p.c < 1) throw DomainError("base exponent c must be >= 1");
}

EulerClosedForm::EulerClosedForm(long n, long h, long r, long c) : n_(n) {
  validate(EulerParams{n, h, r, 0, c});
  const QPoly one_minus_qc = QPoly(1) - QPoly::monomial(c);
  const QPoly two_r = one_plus_qpow(c).pow(static_cast<unsigned long>(r));
  den_ = one_minus_qc.pow(static_cast<unsigned long>(n));
  coeffs_.reserve(static_cast<std::size_t>(n + 1));

  if (r == 0) {
    for (long l = 0; l <= n; ++l) {
      BigRat b(binomial(n, l));
      if (l % 2 == 1) b = -b;
      coeffs_.emplace_back(std::move(b));
    }
    return;
  }

  // Pochhammer factors 1 + q^{ck} for k = k0 .. k0 + n + r - 1. A factor with
  // k < 0 is (1 + q^{c|k|}) / q^{c|k|}; k = 0 contributes the constant 2.
  const long k0 = h - r + 1;
  const long count = n + r;
  auto factor = [&](long idx) -> QPoly {
    const long k = k0 + idx;
    return k == 0 ? QPoly(1) : one_plus_qpow(c * std::labs(k));
  };
  std::vector<QPoly> prefix(static_cast<std::size_t>(count + 1));
  std::vector<QPoly> suffix(static_cast<std::size_t>(count + 1));
  prefix[0] = QPoly(1);
  for (long i = 0; i < count; ++i) {
    prefix[static_cast<std::size_t>(i + 1)] = prefix[static_cast<std::size_t>(i)] * factor(i);
  }
  suffix[static_cast<std::size_t>(count)] = QPoly(1);
  for (long i = count - 1; i >= 0; --i) {
    suffix[static_cast<std::size_t>(i)] = factor(i) * suffix[static_cast<std::size_t>(i + 1)];
  }
  den_ *= prefix[static_cast<std::size_t>(count)];

  for (long l = 0; l <= n; ++l) {
    long q_exp = 0;
    bool has_zero = false;
    for (long idx = l; idx < l + r; ++idx) {
      const long k = k0 + idx;
      if (k < 0) q_exp += c * -k;
      if (k == 0) has_zero = true;
    }
    BigRat scale(binomial(n, l));
    if (l % 2 == 1) scale = -scale;
    if (has_zero) scale /= 2;
    QPoly term = prefix[static_cast<std::size_t>(l)] * suffix[static_cast<std::size_t>(l + r)];
    term = (term * two_r).shifted(q_exp);
    term *= scale;
    coeffs_.push_back(std::move(term));
  }
}

void EulerClosedForm::accumulate(RatFuncSum& sum, long N, const BigRat& weight,
                                 long q_exp) const {
  accumulate(sum, N, QPoly(weight), q_exp);
}

void EulerClosedForm::accumulate(RatFuncSum& sum, long N, const QPoly& weight,
                                 long q_exp) const {
  if (weight.is_zero()) return;
  const long offset = N < 0 ? N * n_ : 0;
  QPoly num;
  for (long l = 0; l <= n_; ++l) {
    num += coeffs_[static_cast<std::size_t>(l)].shifted(N * l - offset);
  }
  sum.add_shifted(num * weight, q_exp + offset, den_);
}

QRatFunc EulerClosedForm::value(long N) const {
  RatFuncSum sum;
  accumulate(sum, N);
  return sum.result();
}

QRatFunc euler_exact(const EulerParams& p) {
  validate(p);
  return EulerClosedForm(p.n, p.h, p.r, p.c).value(p.N);
}

SeriesValue euler_series(long n, long h, long r, double x, double q, double tol) {
  check_numeric_args(n, h, r, x, q);
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const double two_r = std::pow(1.0 + q, static_cast<double>(r));
  if (r == 0) {
    // C_q(m - 1, m) vanishes for m >= 1: only the m = 0 term survives.
    return {std::pow(qnumber(x, q), static_cast<double>(n)), 0.0, 1};
  }
  const double rho = std::pow(q, static_cast<double>(h - r + 1));
  const double bound =
      two_r * std::pow(1.0 / (1.0 - q), static_cast<double>(n)) * qbinom_bound(r, q);
  long last = 0;
  double tail = bound * rho / (1.0 - rho);
  while (tail >= tol) {
    ++last;
    tail *= rho;
  }
  // Terms reach ~(1-q)^-n before cancelling, so they are formed in extended precision.
  const long double q_ext = q;
  const long double rho_ext = std::pow(q_ext, static_cast<long double>(h - r + 1));
  ExtendedSum sum;
  long double rho_m = 1.0L;
  for (long m = 0; m <= last; ++m) {
    const long double sign = (m % 2 == 0) ? 1.0L : -1.0L;
    sum.add(sign * qbinom_ext(m, r, q_ext) * rho_m *
            std::pow(qnumber_ext(static_cast<long double>(m) + x, q_ext), static_cast<long double>(n)));
    rho_m *= rho_ext;
  }
  const long double two_r_ext = std::pow(1.0L + q_ext, static_cast<long double>(r));
  return {static_cast<double>(two_r_ext * sum.value()), tail, last + 1};
}

double euler_series_num(long n, long h, long r, double x, double q, double tol) {
  return euler_series(n, h, r, x, q, tol).value;
}

SeriesValue euler_multisum(long n, long h, long r, double x, double q, long M) {
  check_numeric_args(n, h, r, x, q);
  if (r > 4) throw DomainError("multi-index sum supports r <= 4");
  if (M < 1) throw DomainError("truncation M must be >= 1");
  const long double q_ext = q;
  ExtendedSum sum;
  const long count = detail::cube_sum(
      h, r, q_ext, M,
      [&](long total) {
        return std::pow(qnumber_ext(static_cast<long double>(total) + x, q_ext),
                        static_cast<long double>(n));
      },
      sum);
  const long double two_r_ext = std::pow(1.0L + q_ext, static_cast<long double>(r));
  return {static_cast<double>(two_r_ext * sum.value()), euler_multisum_tail_bound(n, h, r, q, M),
          count};
}

// Terms outside the cube: [2]^r * B * (prod 1/(1-rho_j) - prod (1-rho_j^M)/(1-rho_j)).
double euler_multisum_tail_bound(long n, long h, long r, double q, long M) {
  const double two_r = std::pow(1.0 + q, static_cast<double>(r));
  const double term_bound = std::pow(1.0 / (1.0 - q), static_cast<double>(n));
  return two_r * term_bound * detail::cube_tail_mass(h, r, q, M);
}

double euler_multisum_num(long n, long h, long r, double x, double q, long M) {
  return euler_multisum(n, h, r, x, q, M).value;
}

BigRat classical_euler(long n, long r, const BigRat& x) {
  if (n < 0 || r < 0) throw DomainError("n and r must be non-negative");
  // Coefficients of t^n/n! in (e^t + 1)^r F(t) = 2^r e^{xt}:
  //   2^r E_n(x) = 2^r x^n - sum_{k<n} C(n,k) E_k(x) sum_{j=1}^{r} C(r,j) j^{n-k}.
  const BigRat two_r = pow(BigRat(2), r);
  std::vector<BigRat> values;
  values.reserve(static_cast<std::size_t>(n + 1));
  for (long m = 0; m <= n; ++m) {
    BigRat acc = 0;
    for (long k = 0; k < m; ++k) {
      BigInt inner = 0;
      for (long j = 1; j <= r; ++j) {
        BigInt jp;
        mpz_ui_pow_ui(jp.get_mpz_t(), static_cast<unsigned long>(j),
                      static_cast<unsigned long>(m - k));
        inner += binomial(r, j) * jp;
      }
      acc += BigRat(binomial(m, k) * inner) * values[static_cast<std::size_t>(k)];
    }
    values.push_back(pow(x, m) - acc / two_r);
  }
  return values.back();
}

QRatFunc addition_rhs(long n, long h, long r, long x, long y) {
  if (n < 0) throw DomainError("degree n must be >= 0");
  const QRatFunc bracket = qbracket(x);
  RatFuncSum sum;
  for (long i = 0; i <= n; ++i) {
    const QRatFunc term = QRatFunc(BigRat(binomial(n, i))) * QRatFunc::monomial(i * x) *
                          euler_exact({i, h, r, y, 1}) * bracket.pow(n - i);
    sum.add(term);
  }
  return sum.result();
}

QRatFunc addition_rhs_mirrored(long n, long h, long r, long x, long y) {
  if (n < 0) throw DomainError("degree n must be >= 0");
  const QRatFunc bracket = qbracket(x);
  RatFuncSum sum;
  for (long i = 0; i <= n; ++i) {
    const QRatFunc term = QRatFunc(BigRat(binomial(n, i))) * QRatFunc::monomial((n - i) * x) *
                          euler_exact({n - i, h, r, y, 1}) * bracket.pow(i);
    sum.add(term);
  }
  return sum.result();
}

QRatFunc umbral_expansion(long n, long h, long r, long x) {
  if (n < 0) throw DomainError("degree n must be >= 0");
  const QRatFunc bracket = qbracket(x);
  RatFuncSum sum;
  for (long l = 0; l <= n; ++l) {
    const QRatFunc term = QRatFunc(BigRat(binomial(n, l))) * QRatFunc::monomial(l * x) *
                          euler_exact({l, h, r, 0, 1}) * bracket.pow(n - l);
    sum.add(term);
  }
  return sum.result();
}

}  // namespace qeuler
