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

#include "zpoly.hpp"

#include <algorithm>
#include <cstddef>

namespace qeuler::detail {

namespace {

constexpr std::size_t kKroneckerThreshold = 12;
constexpr int kHeuristicAttempts = 6;

std::size_t max_bits(const ZPoly& p) {
  std::size_t bits = 0;
  for (const auto& c : p) {
    if (c != 0) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  }
  return bits;
}

BigInt max_norm(const ZPoly& p) {
  BigInt out = 0;
  for (const auto& c : p) {
    if (mpz_cmpabs(c.get_mpz_t(), out.get_mpz_t()) > 0) out = abs(c);
  }
  return out;
}

// Evaluates p at 2^bits (or any integer base) by Horner's rule.
BigInt pack(const ZPoly& p, const BigInt& base) {
  BigInt v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    v *= base;
    v += *it;
  }
  return v;
}

BigInt pack_pow2(const ZPoly& p, std::size_t bits) {
  BigInt v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), bits);
    v += *it;
  }
  return v;
}

// Inverse of pack_pow2 using the symmetric residue system, valid when every
// coefficient of the true result has absolute value below 2^(bits-1).
ZPoly unpack_pow2(BigInt v, std::size_t bits) {
  ZPoly out;
  BigInt digit;
  BigInt full;
  BigInt half;
  mpz_setbit(full.get_mpz_t(), bits);
  mpz_setbit(half.get_mpz_t(), bits - 1);
  while (v != 0) {
    mpz_fdiv_r_2exp(digit.get_mpz_t(), v.get_mpz_t(), bits);
    if (digit >= half) digit -= full;
    out.push_back(digit);
    v -= digit;
    mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), bits);
  }
  return out;
}

// Symmetric base-xi digits of v, i.e. the polynomial p with p(xi) = v and
// |coefficients| <= xi/2.
ZPoly interpolate(BigInt v, const BigInt& xi) {
  ZPoly out;
  BigInt half = xi / 2;
  BigInt digit;
  while (v != 0) {
    mpz_fdiv_r(digit.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
    if (digit > half) digit -= xi;
    out.push_back(digit);
    v -= digit;
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
  }
  return out;
}

ZPoly schoolbook(const ZPoly& a, const ZPoly& b) {
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(out);
  return out;
}

}  // namespace

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) < kKroneckerThreshold) return schoolbook(a, b);
  // Each output coefficient is a sum of at most min(len) products.
  const std::size_t terms = std::min(a.size(), b.size());
  const std::size_t bits =
      max_bits(a) + max_bits(b) + mpz_sizeinbase(BigInt(terms).get_mpz_t(), 2) + 2;
  const BigInt pa = pack_pow2(a, bits);
  const BigInt pb = pack_pow2(b, bits);
  ZPoly out = unpack_pow2(pa * pb, bits);
  trim(out);
  return out;
}

bool divexact(const ZPoly& a, const ZPoly& b, ZPoly& quot) {
  quot.clear();
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  ZPoly rem = a;
  const std::size_t db = b.size() - 1;
  const BigInt& lead = b.back();
  quot.assign(a.size() - db, 0);
  BigInt c;
  for (std::size_t i = a.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    if (mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t()) == 0) return false;
    mpz_divexact(c.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) {
      if (b[j] == 0) continue;
      mpz_submul(rem[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    }
    quot[i - db] = c;
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (rem[i] != 0) return false;
  }
  trim(quot);
  return true;
}

BigInt content(const ZPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(ZPoly& p) {
  trim(p);
  if (p.empty()) return;
  BigInt g = content(p);
  if (p.back() < 0) g = -g;
  if (g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

std::optional<ZGcd> heuristic_gcd(const ZPoly& a, const ZPoly& b) {
  const BigInt norm_a = max_norm(a);
  const BigInt norm_b = max_norm(b);
  const BigInt bound = 2 * std::min(norm_a, norm_b) + 29;
  BigInt xi = std::max<BigInt>(
      std::min<BigInt>(bound, 99 * sqrt(bound)),
      2 * std::min<BigInt>(norm_a / abs(a.back()), norm_b / abs(b.back())) + 2);

  for (int attempt = 0; attempt < kHeuristicAttempts; ++attempt) {
    const BigInt va = pack(a, xi);
    const BigInt vb = pack(b, xi);
    if (va != 0 && vb != 0) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
      // g may carry integer factors that are not part of the polynomial gcd;
      // the primitive part of its interpolation drops them.
      ZPoly cand = interpolate(g, xi);
      make_primitive(cand);
      const BigInt hv = cand.empty() ? BigInt(0) : pack(cand, xi);
      if (hv != 0 && mpz_divisible_p(va.get_mpz_t(), hv.get_mpz_t()) != 0 &&
          mpz_divisible_p(vb.get_mpz_t(), hv.get_mpz_t()) != 0) {
        // Interpolated cofactors are only right when xi exceeds twice their
        // coefficients; otherwise fall back to long division.
        ZPoly cof_a = interpolate(va / hv, xi);
        ZPoly cof_b = interpolate(vb / hv, xi);
        const bool ok_a = mul(cand, cof_a) == a || divexact(a, cand, cof_a);
        const bool ok_b = ok_a && (mul(cand, cof_b) == b || divexact(b, cand, cof_b));
        if (ok_a && ok_b) return ZGcd{std::move(cand), std::move(cof_a), std::move(cof_b)};
      }
    }
    BigInt root = sqrt(sqrt(xi));
    xi = 73794 * xi * root / 27011;
  }
  return std::nullopt;
}

}  // namespace qeuler::detail
