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

#ifndef QEULER_SRC_CUBE_SUM_HPP
#define QEULER_SRC_CUBE_SUM_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace qeuler::detail {

// Sum over the cube 0 <= m_j < M (j = 0..r-1) of
//   (-1)^T * prod_j q^{(h-j) m_j} * value(T),  T = m_0 + ... + m_{r-1}.
// value(T) is tabulated once per total; the cube is still walked term by term.
template <typename Sum, typename ValueAt>
long cube_sum(long h, long r, long double q, long M, const ValueAt& value_at, Sum& sum) {
  using V = decltype(value_at(0L));
  const auto rr = static_cast<std::size_t>(r);
  const auto mm = static_cast<std::size_t>(M);
  std::vector<std::vector<long double>> pw(rr, std::vector<long double>(mm, 1.0L));
  for (std::size_t j = 0; j < rr; ++j) {
    const long double rho = std::pow(q, static_cast<long double>(h - static_cast<long>(j)));
    for (std::size_t m = 1; m < mm; ++m) pw[j][m] = pw[j][m - 1] * rho;
  }
  std::vector<V> vals(rr * (mm - 1) + 1);
  for (std::size_t t = 0; t < vals.size(); ++t) {
    vals[t] = value_at(static_cast<long>(t));
    if (t % 2 == 1) vals[t] = -vals[t];
  }
  std::vector<std::size_t> idx(rr, 0);
  long count = 0;
  while (true) {
    std::size_t total = 0;
    long double weight = 1.0L;
    for (std::size_t j = 0; j < rr; ++j) {
      total += idx[j];
      weight *= pw[j][idx[j]];
    }
    sum.add(weight * vals[total]);
    ++count;
    std::size_t pos = rr;
    while (pos > 0 && ++idx[pos - 1] == mm) idx[--pos] = 0;
    if (pos == 0) break;
  }
  return count;
}

// Mass of the geometric weights outside the cube:
//   prod_j 1/(1-rho_j) - prod_j (1-rho_j^M)/(1-rho_j),  rho_j = q^{h-j}.
inline double cube_tail_mass(long h, long r, double q, long M) {
  double full = 1.0;
  double kept = 1.0;
  for (long j = 0; j < r; ++j) {
    const double rho = std::pow(q, static_cast<double>(h - j));
    full /= 1.0 - rho;
    kept *= (1.0 - std::pow(rho, static_cast<double>(M))) / (1.0 - rho);
  }
  return full - kept;
}

}  // namespace qeuler::detail

#endif  // QEULER_SRC_CUBE_SUM_HPP
