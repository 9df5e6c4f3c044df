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

#ifndef QEULER_TESTS_RANDOM_DAG_HPP
#define QEULER_TESTS_RANDOM_DAG_HPP

#include <cstddef>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "qeuler/qratfunc.hpp"

namespace qeuler::oracle {

// Random arithmetic DAGs: nodes are leaves or binary ops on earlier nodes.
struct Dag {
  struct Node {
    int op;  // 0 leaf, 1 add, 2 sub, 3 mul, 4 div
    std::size_t lhs = 0;
    std::size_t rhs = 0;
    QRatFunc leaf;
  };
  std::vector<Node> nodes;
};

inline Dag random_dag(std::mt19937_64& rng) {
  Dag d;
  const int leaves = 3 + static_cast<int>(rng() % 3);
  for (int i = 0; i < leaves; ++i) {
    QPoly den = oracle::random_poly(rng, 3, 4);
    if (den.is_zero()) den = QPoly(1);
    Dag::Node n{0, 0, 0, QRatFunc(oracle::random_poly(rng, 3, 4), den)};
    if (rng() % 4 == 0) n.leaf = n.leaf * QRatFunc::monomial(static_cast<long>(rng() % 5) - 2);
    d.nodes.push_back(std::move(n));
  }
  const int ops = 4 + static_cast<int>(rng() % 5);
  for (int i = 0; i < ops; ++i) {
    const std::size_t sz = d.nodes.size();
    d.nodes.push_back({1 + static_cast<int>(rng() % 4), rng() % sz, rng() % sz, {}});
  }
  return d;
}

template <typename T, typename Leaf, typename Div>
T eval_dag(const Dag& d, bool reversed, Leaf leaf, Div div) {
  std::vector<T> v(d.nodes.size());
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const auto& n = d.nodes[i];
    switch (n.op) {
      case 0: v[i] = leaf(n.leaf); break;
      case 1: v[i] = reversed ? T(v[n.rhs] + v[n.lhs]) : T(v[n.lhs] + v[n.rhs]); break;
      case 2: v[i] = reversed ? T(-(v[n.rhs] - v[n.lhs])) : T(v[n.lhs] - v[n.rhs]); break;
      case 3: v[i] = reversed ? T(v[n.rhs] * v[n.lhs]) : T(v[n.lhs] * v[n.rhs]); break;
      default: v[i] = div(v[n.lhs], v[n.rhs], reversed); break;
    }
  }
  return v.back();
}

struct DagOutcome {
  bool same_serialization = false;
  bool canonical = false;
  int points_checked = 0;
  int points_agreeing = 0;
};

// Builds one random DAG, evaluates it symbolically in two operand orders and
// compares against direct rational evaluation at `points` random points.
inline DagOutcome check_random_dag(std::mt19937_64& rng, int points = 5) {
  bool zero_division = false;
  const auto div = [&](const QRatFunc& a, const QRatFunc& b, bool rev) {
    if (b.is_zero()) {
      zero_division = true;
      return a;
    }
    return rev ? b.inverse() * a : a / b;
  };
  const auto id = [](const QRatFunc& x) { return x; };
  // DAGs that divide by an identically zero node are resampled.
  Dag d;
  QRatFunc f;
  do {
    zero_division = false;
    d = random_dag(rng);
    f = eval_dag<QRatFunc>(d, false, id, div);
  } while (zero_division);
  const QRatFunc g = eval_dag<QRatFunc>(d, true, id, div);
  DagOutcome out;
  out.same_serialization = f.to_string() == g.to_string();
  out.canonical = f.den().leading_coeff() == 1 && gcd(f.num(), f.den()).is_constant();
  int attempts = 0;
  while (out.points_checked < points && attempts < 200 * points) {
    ++attempts;
    const BigRat q0 = random_rat(rng, 9);
    bool pole = false;
    const auto leaf = [&](const QRatFunc& x) {
      if (x.den().eval(q0) == 0) pole = true;
      return pole ? BigRat(0) : x.eval(q0);
    };
    const auto rdiv = [&](const BigRat& a, const BigRat& b, bool) {
      if (b == 0) {
        pole = true;
        return a;
      }
      return BigRat(a / b);
    };
    const BigRat direct = eval_dag<BigRat>(d, false, leaf, rdiv);
    if (pole || f.den().eval(q0) == 0) continue;
    ++out.points_checked;
    if (f.eval(q0) == direct) ++out.points_agreeing;
  }
  return out;
}

}  // namespace qeuler::oracle

#endif  // QEULER_TESTS_RANDOM_DAG_HPP
