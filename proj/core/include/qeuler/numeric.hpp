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

#ifndef QEULER_NUMERIC_HPP
#define QEULER_NUMERIC_HPP

#include <cmath>
#include <complex>

namespace qeuler {

/// Neumaier-compensated running sum; the result depends only on the order
/// in which terms are added.
// Neumaier summation.
template <typename T>
class BasicCompensatedSum {
 public:
  void add(T v) {
    const T t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_ = 0;
  T comp_ = 0;
};

using CompensatedSum = BasicCompensatedSum<double>;
using ExtendedSum = BasicCompensatedSum<long double>;

template <typename T>
class BasicComplexCompensatedSum {
 public:
  void add(std::complex<T> v) {
    re_.add(v.real());
    im_.add(v.imag());
  }
  std::complex<T> value() const { return {re_.value(), im_.value()}; }

 private:
  BasicCompensatedSum<T> re_;
  BasicCompensatedSum<T> im_;
};

using ComplexCompensatedSum = BasicComplexCompensatedSum<double>;
using ComplexExtendedSum = BasicComplexCompensatedSum<long double>;

/// [x]_q = (1 - q^x) / (1 - q) for real x and 0 < q < 1.
inline double qnumber(double x, double q) { return -std::expm1(x * std::log(q)) / (1.0 - q); }

/// Gaussian binomial C_q(m + r - 1, m) = prod_{i=1}^{r-1} (1 - q^{m+i}) / (1 - q^i).
inline long double qnumber_ext(long double x, long double q) {
  return -std::expm1(x * std::log(q)) / (1.0L - q);
}

inline double qbinom_numeric(long m, long r, double q) {
  const double lq = std::log(q);
  double out = 1.0;
  for (long i = 1; i < r; ++i) {
    out *= std::expm1(static_cast<double>(m + i) * lq) / std::expm1(static_cast<double>(i) * lq);
  }
  return out;
}

inline long double qbinom_ext(long m, long r, long double q) {
  const long double lq = std::log(q);
  long double out = 1.0L;
  for (long i = 1; i < r; ++i) {
    out *= std::expm1(static_cast<long double>(m + i) * lq) /
           std::expm1(static_cast<long double>(i) * lq);
  }
  return out;
}

/// sup over m of qbinom_numeric(m, r, q): prod_{i=1}^{r-1} 1 / (1 - q^i).
inline double qbinom_bound(long r, double q) {
  const double lq = std::log(q);
  double out = 1.0;
  for (long i = 1; i < r; ++i) out /= -std::expm1(static_cast<double>(i) * lq);
  return out;
}

}  // namespace qeuler

#endif  // QEULER_NUMERIC_HPP
