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

#ifndef QEULER_EULER_HPP
#define QEULER_EULER_HPP

#include <vector>

#include "qeuler/bigrat.hpp"
#include "qeuler/qpoly.hpp"
#include "qeuler/qratfunc.hpp"

namespace qeuler {

/// Request for E_{n, q^c}^{(h, r)}(N / c): degree n, weight h, order r, and an
/// argument N/c whose q-numbers are taken in base q^c.
struct EulerParams {
  long n = 0;
  long h = 0;
  long r = 0;
  long N = 0;
  long c = 1;
};

/// Throws DomainError unless n >= 0, r >= 0, c >= 1.
void validate(const EulerParams& p);

/// Closed form of the (h,q)-Euler polynomial for fixed (n, h, r, c), written
/// as a combination of q^(N*l):
///
///   E(N/c) = sum_{l=0}^{n} coeff(l) * q^(N*l) / den()
///
/// with
///   coeff(l) / den() = [2]_{q^c}^r / (1 - q^c)^n * C(n,l) (-1)^l
///                      / (-q^{c(h-r+l+1)}; q^c)_r.
///
/// Every Pochhammer denominator divides den(), so sums over many arguments N
/// can be accumulated as polynomials and reduced once.
class EulerClosedForm {
 public:
  EulerClosedForm(long n, long h, long r, long c = 1);

  long n() const { return n_; }
  const QPoly& coeff(long l) const { return coeffs_.at(static_cast<std::size_t>(l)); }
  const QPoly& den() const { return den_; }

  /// Adds weight * q^q_exp * E(N/c) to sum without reducing.
  void accumulate(RatFuncSum& sum, long N, const BigRat& weight = 1, long q_exp = 0) const;
  /// Adds weight(q) * q^q_exp * E(N/c) to sum without reducing.
  void accumulate(RatFuncSum& sum, long N, const QPoly& weight, long q_exp) const;

  QRatFunc value(long N) const;

 private:
  long n_;
  std::vector<QPoly> coeffs_;
  QPoly den_;
};

/// Canonical E_{n, q^c}^{(h, r)}(N / c) for any integer h.
QRatFunc euler_exact(const EulerParams& p);

/// Truncated series together with a proven bound on the discarded tail.
struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
  long terms = 0;
};

/// Single-sum series [2]_q^r sum_m C_q(m+r-1, m) (-q^{h-r+1})^m [m+x]_q^n,
/// truncated once the geometric tail bound drops below tol.
/// Throws ConvergenceDomainError when h < r.
SeriesValue euler_series(long n, long h, long r, double x, double q, double tol);
double euler_series_num(long n, long h, long r, double x, double q, double tol);

/// Direct r-fold sum over the cube [0, M)^r, r <= 4.
SeriesValue euler_multisum(long n, long h, long r, double x, double q, long M);
double euler_multisum_num(long n, long h, long r, double x, double q, long M);
/// Bound on the terms of the r-fold sum left outside the cube [0, M)^r.
double euler_multisum_tail_bound(long n, long h, long r, double q, long M);

/// Classical higher-order Euler polynomial E_n^{(r)}(x), exact.
BigRat classical_euler(long n, long r, const BigRat& x);

/// sum_i C(n,i) q^{ix} E_i(y) [x]_q^{n-i}.
QRatFunc addition_rhs(long n, long h, long r, long x, long y);

/// sum_i C(n,i) q^{(n-i)x} E_{n-i}(y) [x]_q^i.
QRatFunc addition_rhs_mirrored(long n, long h, long r, long x, long y);

/// sum_l C(n,l) q^{lx} E_l(0) [x]_q^{n-l}.
QRatFunc umbral_expansion(long n, long h, long r, long x);

}  // namespace qeuler

#endif  // QEULER_EULER_HPP
