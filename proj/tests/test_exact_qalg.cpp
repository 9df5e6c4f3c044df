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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "random_dag.hpp"
#include "qeuler/bigrat.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/numeric.hpp"
#include "qeuler/qcombinat.hpp"
#include "qeuler/qpoly.hpp"
#include "qeuler/qratfunc.hpp"

namespace qeuler {
namespace {

QPoly poly(std::initializer_list<long> dense) {
  std::vector<BigRat> c;
  for (long v : dense) c.emplace_back(v);
  return QPoly::from_dense(c);
}

TEST(BigRat, CanonicalInvariants) {
  const BigRat v = make_rat(6, -4);
  EXPECT_EQ(v.get_num(), -3);
  EXPECT_EQ(v.get_den(), 2);
  EXPECT_EQ(make_rat(0, -7).get_den(), 1);
  EXPECT_EQ(to_string(v), "-3/2");
  EXPECT_EQ(to_string(BigRat(5)), "5");
}

TEST(BigRat, ParseRoundTrip) {
  EXPECT_EQ(parse_rat("3/6"), make_rat(1, 2));
  EXPECT_EQ(parse_rat("-12"), BigRat(-12));
  EXPECT_EQ(parse_rat(" 7/1 "), BigRat(7));
  EXPECT_THROW(parse_rat("1/0"), ParseError);
  EXPECT_THROW(parse_rat("abc"), ParseError);
  EXPECT_THROW(parse_rat(""), ParseError);
}

TEST(BigRat, PowAndBinomial) {
  EXPECT_EQ(pow(BigRat(0), 0), 1);
  EXPECT_EQ(pow(make_rat(2, 3), -2), make_rat(9, 4));
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_THROW(pow(BigRat(0), -1), DomainError);
}

TEST(QPoly, ZeroAndDegree) {
  QPoly z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), kZeroDegree);
  EXPECT_EQ(z.to_string(), "0");
  const QPoly p = QPoly::from_terms({{3, 1}, {0, 2}, {3, -1}, {1, 0}});
  EXPECT_EQ(p, QPoly(2));
}

TEST(QPoly, TextForm) {
  const QPoly p = QPoly::from_terms({{0, make_rat(1, 2)}, {1, -1}, {2, 1}, {5, make_rat(-3, 4)}});
  EXPECT_EQ(p.to_string(), "1/2 + -1*q + q^2 + -3/4*q^5");
}

TEST(QPoly, DivRemReconstructs) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const QPoly a = oracle::random_poly(rng, 9, 9);
    QPoly b = oracle::random_poly(rng, 5, 9);
    if (b.is_zero()) continue;
    const DivRem dr = divrem(a, b);
    EXPECT_EQ(dr.quot * b + dr.rem, a);
    EXPECT_TRUE(dr.rem.is_zero() || dr.rem.degree() < b.degree());
  }
}

TEST(QPoly, ExactDivision) {
  const QPoly a = poly({1, 1}) * poly({1, 0, 1}) * poly({0, 0, 3});
  EXPECT_EQ(exact_div(a, poly({1, 0, 1})), poly({1, 1}) * poly({0, 0, 3}));
  EXPECT_THROW(exact_div(poly({1, 1}), poly({1, 0, 1})), DomainError);
  EXPECT_THROW(exact_div(poly({1}), QPoly()), DomainError);
}

// The fast gcd must agree with plain Euclid over Q.
TEST(QPoly, GcdMatchesEuclid) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 300; ++it) {
    const QPoly g = oracle::random_poly(rng, 6, 20);
    const QPoly a = g * oracle::random_poly(rng, 8, 20);
    const QPoly b = g * oracle::random_poly(rng, 8, 20);
    const QPoly fast = gcd(a, b);
    EXPECT_EQ(fast, gcd_euclid(a, b)) << a.to_string() << " | " << b.to_string();
    if (a.is_zero() && b.is_zero()) continue;
    const GcdCofactors gc = gcd_cofactors(a, b);
    EXPECT_EQ(gc.gcd, fast);
    EXPECT_EQ(gc.gcd * gc.a_over_gcd, a);
    EXPECT_EQ(gc.gcd * gc.b_over_gcd, b);
  }
}

TEST(QPoly, GcdLargeCoefficients) {
  // Cyclotomic-style products with large binomial coefficients.
  const QPoly g = poly({1, 1}).pow(25) * poly({1, 0, 1});
  const QPoly a = g * poly({1, -7, 0, 0, 0, 13}).pow(3);
  const QPoly b = g * poly({5, 0, 1}).pow(4);
  EXPECT_EQ(gcd(a, b), gcd_euclid(a, b));
  EXPECT_EQ(gcd(a, b), g.monic());
}

TEST(QPoly, SubstituteAndEval) {
  const QPoly p = poly({1, 2, 3});
  EXPECT_EQ(p.substitute_power(2), poly({1, 0, 2, 0, 3}));
  EXPECT_EQ(p.eval(make_rat(1, 2)), make_rat(11, 4));
  EXPECT_DOUBLE_EQ(p.eval(0.5), 2.75);
}

TEST(QBracket, Examples) {
  EXPECT_TRUE(qbracket(0, 1).is_zero());
  EXPECT_EQ(qbracket(3, 1), QRatFunc(poly({1, 1, 1})));
  EXPECT_EQ(qbracket(-1, 1), QRatFunc::monomial(BigRat(-1), -1));
  EXPECT_EQ(qbracket(-1, 1).to_string(), "-1 / q");
  const QRatFunc f53 = qbracket(5, 3);
  EXPECT_EQ(f53, QRatFunc(poly({1, 0, 0, 0, 0, -1}), poly({1, 0, 0, -1})));
  EXPECT_EQ(f53.eval(BigRat(1)), make_rat(5, 3));
}

TEST(QBracket, AdditionSplitting) {
  for (long c = 1; c <= 3; ++c) {
    for (long A = -6; A <= 6; ++A) {
      for (long B = -6; B <= 6; ++B) {
        EXPECT_EQ(qbracket(A + B, c), qbracket(A, c) + QRatFunc::monomial(A) * qbracket(B, c))
            << A << " " << B << " " << c;
      }
    }
  }
}

TEST(QFactorial, Examples) {
  EXPECT_EQ(qfactorial(0, 1), QPoly(1));
  EXPECT_EQ(qfactorial(2, 1), poly({1, 1}));
  EXPECT_EQ(qfactorial(3, 1), poly({1, 1}) * poly({1, 1, 1}));
  EXPECT_EQ(qfactorial(2, 2), poly({1, 0, 1}));
}

TEST(GaussBinom, Examples) {
  EXPECT_EQ(gauss_binom(5, 0, 1), QPoly(1));
  EXPECT_EQ(gauss_binom(2, 1, 1), poly({1, 1}));
  EXPECT_EQ(gauss_binom(4, 2, 1), poly({1, 1, 2, 1, 1}));
  EXPECT_TRUE(gauss_binom(2, 3, 1).is_zero());
}

TEST(GaussBinom, MatchesPascalOracle) {
  for (long c = 1; c <= 3; ++c) {
    for (long m = 0; m <= 12; ++m) {
      for (long k = 0; k <= m; ++k) {
        EXPECT_EQ(oracle::dense_of(gauss_binom(m, k, c)), oracle::pascal_gauss_binom(m, k, c))
            << m << " " << k << " " << c;
      }
    }
  }
}

TEST(GaussBinom, SymmetryPascalAndDegeneration) {
  for (long c = 1; c <= 3; ++c) {
    for (long m = 0; m <= 12; ++m) {
      for (long k = 0; k <= m; ++k) {
        const QPoly g = gauss_binom(m, k, c);
        EXPECT_EQ(g, gauss_binom(m, m - k, c));
        EXPECT_EQ(g.eval(BigRat(1)), BigRat(binomial(m, k)));
        for (const auto& t : g.terms()) {
          EXPECT_GT(t.coeff, 0);
          EXPECT_EQ(t.coeff.get_den(), 1);
        }
      }
    }
  }
  for (long m = 2; m <= 12; ++m) {
    for (long k = 1; k < m; ++k) {
      EXPECT_EQ(gauss_binom(m, k, 1),
                gauss_binom(m - 1, k - 1, 1) + gauss_binom(m - 1, k, 1).shifted(k));
    }
  }
}

TEST(QPoch, Examples) {
  EXPECT_EQ(qpoch_monomial(1, 1, 1, 0), QRatFunc(1));
  EXPECT_EQ(qpoch_monomial(-1, 1, 1, 2), QRatFunc(poly({1, 1}) * poly({1, 0, 1})));
  const QRatFunc expected(poly({2}) * poly({1, 0, 1}) * poly({1, 1}), poly({0, 0, 0, 1}));
  EXPECT_EQ(qpoch_monomial(-1, -2, 1, 3), expected);
  EXPECT_EQ(qpoch_monomial(1, 2, 3, 2), QRatFunc(poly({1, 0, -1}) * poly({1, 0, 0, 0, 0, -1})));
}

// Sum_{m<=M} C_q(m+r-1, m) z^m against 1/(-z;q)_r with z = -q^j.
TEST(QPoch, QBinomialTheorem) {
  for (double q : {0.3, 0.5, 0.8}) {
    for (long j = 1; j <= 3; ++j) {
      for (long r = 1; r <= 4; ++r) {
        const long M = 200;
        const double z = -std::pow(q, static_cast<double>(j));
        CompensatedSum sum;
        double zm = 1.0;
        for (long m = 0; m <= M; ++m) {
          sum.add(gauss_binom(m + r - 1, m, 1).eval(q) * zm);
          zm *= z;
        }
        const double target = 1.0 / qpoch_monomial(-1, j, 1, r).eval(q);
        const double rho = std::abs(z);
        const double tail = qbinom_bound(r, q) * std::pow(rho, M + 1) / (1 - rho);
        EXPECT_LE(std::abs(sum.value() - target), tail + 1e-13) << q << " " << j << " " << r;
      }
    }
  }
}

TEST(QRatFunc, EvalExamples) {
  EXPECT_EQ(QRatFunc(poly({1, 1, 1})).eval(BigRat(1)), 3);
  EXPECT_EQ(QRatFunc::monomial(BigRat(-1), -1).eval(make_rat(1, 2)), -2);
  const QRatFunc f(poly({1, 0, 0, 0, 0, -1}), poly({1, 0, 0, -1}));
  EXPECT_EQ(f.eval(BigRat(1)), make_rat(5, 3));
  EXPECT_THROW(QRatFunc(poly({1}), poly({-1, 1})).eval(BigRat(1)), PoleError);
  EXPECT_THROW(QRatFunc(poly({1}), QPoly()), DomainError);
  EXPECT_THROW(QRatFunc().inverse(), DomainError);
}

TEST(QRatFunc, CanonicalMonicDenominator) {
  const QRatFunc f(poly({2, 2}), poly({4, 0, -4}));
  EXPECT_EQ(f.den().leading_coeff(), 1);
  EXPECT_EQ(f, QRatFunc(poly({-1}), poly({-2, 2})));
  EXPECT_EQ(f.to_string(), "-1/2 / -1 + q");
  EXPECT_EQ(QRatFunc(QPoly(), poly({3, 1})).to_string(), "0 / 1");
}

TEST(QRatFunc, PowAndSubstitute) {
  const QRatFunc f = QRatFunc(poly({1, 1})) / QRatFunc(poly({0, 1, 0, 1}));
  EXPECT_EQ(f.pow(3) * f.pow(-3), QRatFunc(1));
  EXPECT_EQ(f.pow(0), QRatFunc(1));
  const BigRat q0 = make_rat(2, 5);
  EXPECT_EQ(f.substitute_power(3).eval(q0), f.eval(pow(q0, 3)));
}

TEST(RatFuncSum, MatchesPairwiseAddition) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 50; ++it) {
    RatFuncSum acc;
    QRatFunc ref;
    for (int k = 0; k < 6; ++k) {
      QPoly den = oracle::random_poly(rng, 4, 5);
      if (den.is_zero()) den = QPoly(1);
      const QPoly num = oracle::random_poly(rng, 5, 5);
      const long shift = static_cast<long>(rng() % 7) - 3;
      acc.add_shifted(num, shift, den);
      ref += QRatFunc::monomial(shift) * QRatFunc(num, den);
    }
    EXPECT_EQ(acc.result(), ref);
  }
}

TEST(QRatFunc, CanonicalityOnRandomDags) {
  std::mt19937_64 rng(2026);
  int checked = 0;
  for (int it = 0; it < 300; ++it) {
    const oracle::DagOutcome o = oracle::check_random_dag(rng);
    ASSERT_TRUE(o.same_serialization) << it;
    EXPECT_TRUE(o.canonical) << it;
    EXPECT_EQ(o.points_checked, o.points_agreeing) << it;
    checked += o.points_checked;
  }
  EXPECT_GT(checked, 1000);
}

}  // namespace
}  // namespace qeuler
