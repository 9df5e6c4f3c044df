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

#ifndef QEULER_ZETA_HPP
#define QEULER_ZETA_HPP

#include <complex>

#include "qeuler/report.hpp"

namespace qeuler {

/// One evaluation of zeta_{q,r}^{(h)}(s, x).
struct ZetaQuery {
  std::complex<double> s;
  double x = 1.0;
  long h = 0;
  long r = 0;
  double q = 0.5;
  double tol = 1e-10;
};

struct ComplexSeriesValue {
  std::complex<double> value;
  double tail_bound = 0.0;
  long terms = 0;
};

/// Single-sum form [2]_q^r sum_m C_q(m+r-1,m) (-q^{h-r+1})^m [m+x]_q^{-s}.
/// Throws ConvergenceDomainError when h < r and DomainError when x <= 0.
ComplexSeriesValue zeta_single_sum(const ZetaQuery& z);

/// r-fold sum over the cube [0, M)^r (r <= 4). z.tol is ignored.
ComplexSeriesValue zeta_multi_sum(const ZetaQuery& z, long M);
/// Bound on the terms of the r-fold sum left outside the cube [0, M)^r.
double zeta_multisum_tail_bound(const ZetaQuery& z, long M);

/// zeta(-n, x) from the series against the closed form E_{n,q}^{(h,r)}(x);
/// passes when the two agree within 2 * tol.
IdentityReport lemma_1_1_check(long n, long x, long h, long r, double q, double tol);

}  // namespace qeuler

#endif  // QEULER_ZETA_HPP
