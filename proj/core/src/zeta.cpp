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

#include "qeuler/zeta.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qeuler/bigrat.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/numeric.hpp"

#include "cube_sum.hpp"

namespace qeuler {

namespace {

void check_query(const ZetaQuery& z) {
  if (!(z.x > 0.0) || !std::isfinite(z.x)) {
    throw DomainError("zeta needs x > 0 (got " + format_real(z.x) + ")");
  }
  if (!(z.q > 0.0 && z.q < 1.0)) throw DomainError("numeric q must lie in (0, 1)");
  if (z.r < 0) throw DomainError("order r must be >= 0");
  if (z.h < z.r) {
    throw ConvergenceDomainError("zeta series needs h >= r (got h = " + std::to_string(z.h) +
                                 ", r = " + std::to_string(z.r) + ")");
  }
}

// w^{-s} for real w > 0 on the principal branch.
using cld = std::complex<long double>;

// Principal branch; w is a positive real.
cld inverse_power(long double w, std::complex<double> s) {
  return std::exp(-cld(s.real(), s.imag()) * std::log(w));
}

std::complex<double> narrow(cld v) {
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

// Bound on |[y]_q^{-s}| over y >= x: the base lies in [[x]_q, 1/(1-q)).
double power_bound(const ZetaQuery& z) {
  const double sigma = z.s.real();
  const double low = std::pow(qnumber(z.x, z.q), -sigma);
  const double high = std::pow(1.0 - z.q, sigma);
  return std::max(low, high) * std::exp(std::abs(z.s.imag()) * std::numbers::pi);
}

}  // namespace

ComplexSeriesValue zeta_single_sum(const ZetaQuery& z) {
  check_query(z);
  if (!(z.tol > 0.0)) throw DomainError("tolerance must be positive");
  if (z.r == 0) return {narrow(inverse_power(qnumber_ext(z.x, z.q), z.s)), 0.0, 1};

  const double two_r = std::pow(1.0 + z.q, static_cast<double>(z.r));
  const double rho = std::pow(z.q, static_cast<double>(z.h - z.r + 1));
  const double bound = two_r * qbinom_bound(z.r, z.q) * power_bound(z);
  long last = 0;
  double tail = bound * rho / (1.0 - rho);
  while (tail >= z.tol) {
    ++last;
    tail *= rho;
  }
  const long double q_ext = z.q;
  const long double rho_ext = std::pow(q_ext, static_cast<long double>(z.h - z.r + 1));
  ComplexExtendedSum sum;
  long double rho_m = 1.0L;
  for (long m = 0; m <= last; ++m) {
    const long double sign = (m % 2 == 0) ? 1.0L : -1.0L;
    const long double weight = sign * qbinom_ext(m, z.r, q_ext) * rho_m;
    sum.add(weight * inverse_power(qnumber_ext(static_cast<long double>(m) + z.x, q_ext), z.s));
    rho_m *= rho_ext;
  }
  const long double two_r_ext = std::pow(1.0L + q_ext, static_cast<long double>(z.r));
  return {narrow(two_r_ext * sum.value()), tail, last + 1};
}

ComplexSeriesValue zeta_multi_sum(const ZetaQuery& z, long M) {
  check_query(z);
  if (z.r > 4) throw DomainError("multi-index sum supports r <= 4");
  if (M < 1) throw DomainError("truncation M must be >= 1");
  const long double q_ext = z.q;
  ComplexExtendedSum sum;
  const long count = detail::cube_sum(
      z.h, z.r, q_ext, M,
      [&](long total) {
        return inverse_power(qnumber_ext(static_cast<long double>(total) + z.x, q_ext), z.s);
      },
      sum);
  const long double two_r_ext = std::pow(1.0L + q_ext, static_cast<long double>(z.r));
  return {narrow(two_r_ext * sum.value()), zeta_multisum_tail_bound(z, M), count};
}

double zeta_multisum_tail_bound(const ZetaQuery& z, long M) {
  const double two_r = std::pow(1.0 + z.q, static_cast<double>(z.r));
  return two_r * power_bound(z) * detail::cube_tail_mass(z.h, z.r, z.q, M);
}

IdentityReport lemma_1_1_check(long n, long x, long h, long r, double q, double tol) {
  if (n < 0) throw DomainError("degree n must be >= 0");
  if (x <= 0) throw DomainError("zeta needs x > 0 (got " + std::to_string(x) + ")");
  IdentityReport rep;
  rep.identity = Identity::kLemma11;
  rep.exact = false;
  rep.params = {{"n", std::to_string(n)}, {"x", std::to_string(x)}, {"h", std::to_string(h)},
                {"r", std::to_string(r)}, {"q", format_real(q)},     {"tol", format_real(tol)}};
  const ZetaQuery z{{-static_cast<double>(n), 0.0}, static_cast<double>(x), h, r, q, tol};
  const ComplexSeriesValue series = zeta_single_sum(z);
  const double exact = to_double(euler_exact({n, h, r, x, 1}).eval(BigRat(q)));
  rep.lhs = format_real(series.value.real());
  rep.rhs = format_real(exact);
  rep.deviation = std::abs(series.value - std::complex<double>(exact, 0.0));
  rep.equal = rep.deviation <= 2.0 * tol;
  return rep;
}

}  // namespace qeuler
