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

// Dense integer polynomial kernels used behind QPoly: Kronecker-substitution
// multiplication and the heuristic gcd of Char, Geddes and Gonnet.

#ifndef QEULER_SRC_ZPOLY_HPP
#define QEULER_SRC_ZPOLY_HPP

#include <optional>
#include <vector>

#include "qeuler/bigrat.hpp"

namespace qeuler::detail {

/// coeffs[i] multiplies q^i. Trailing zeros are trimmed by every producer.
using ZPoly = std::vector<BigInt>;

void trim(ZPoly& p);
ZPoly mul(const ZPoly& a, const ZPoly& b);
/// Exact division in Z[q]; returns false (quot unspecified) when b does not
/// divide a. b must be nonzero.
bool divexact(const ZPoly& a, const ZPoly& b, ZPoly& quot);
/// gcd of coefficients, non-negative.
BigInt content(const ZPoly& p);
/// Divides out the content and makes the leading coefficient positive.
void make_primitive(ZPoly& p);

struct ZGcd {
  ZPoly gcd;        // primitive, positive leading coefficient
  ZPoly cofactor_a; // a == gcd * cofactor_a
  ZPoly cofactor_b;
};

/// Heuristic gcd of two primitive polynomials of positive degree.
/// Returns nullopt when the heuristic gives up; callers fall back to a
/// Euclidean algorithm.
std::optional<ZGcd> heuristic_gcd(const ZPoly& a, const ZPoly& b);

}  // namespace qeuler::detail

#endif  // QEULER_SRC_ZPOLY_HPP
