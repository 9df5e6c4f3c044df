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

#include "qeuler/identities.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <utility>

#include "qeuler/errors.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/numeric.hpp"
#include "qeuler/qcombinat.hpp"
#include "qeuler/zeta.hpp"

namespace qeuler {

namespace {

// Calls f(j) for every j in [0, base)^r in lexicographic order.
void for_each_tuple(long base, long r, const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> j(static_cast<std::size_t>(r), 0);
  while (true) {
    f(j);
    long pos = r - 1;
    while (pos >= 0 && ++j[static_cast<std::size_t>(pos)] == base) {
      j[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return;
  }
}

// Sparse Laurent polynomial sum_e coeff_e q^e built from monomials.
class MonomialSum {
 public:
  void add(long exp, long coeff) { terms_.push_back({exp, BigRat(coeff)}); }
  bool empty() const { return terms_.empty(); }
  long low() const {
    long out = 0;
    for (const auto& t : terms_) out = std::min(out, t.exp);
    return out;
  }
  /// q^{-base} times the sum, as a polynomial; base <= low().
  QPoly shifted_poly(long base) const {
    std::vector<QPoly::Term> terms = terms_;
    for (auto& t : terms) t.exp -= base;
    return QPoly::from_terms(std::move(terms));
  }

 private:
  std::vector<QPoly::Term> terms_;
};

long sum_of(const std::vector<long>& j) {
  long out = 0;
  for (long v : j) out += v;
  return out;
}

// sum_l (h - l + 1) j_l with 1-based l.
long weighted_sum(const std::vector<long>& j, long h) {
  long out = 0;
  for (std::size_t l = 0; l < j.size(); ++l) out += (h - static_cast<long>(l)) * j[l];
  return out;
}

std::pair<long, long> moduli(Side side, const SymCheckParams& p) {
  return side == Side::kLeft ? std::pair{p.a, p.b} : std::pair{p.b, p.a};
}

std::vector<std::pair<std::string, std::string>> sym_params(const SymCheckParams& p) {
  return {{"a", std::to_string(p.a)}, {"b", std::to_string(p.b)}, {"n", std::to_string(p.n)},
          {"h", std::to_string(p.h)}, {"r", std::to_string(p.r)}, {"x", std::to_string(p.x)}};
}

// Deviation reported for a failed exact comparison: |lhs - rhs| at q = 1/2.
double exact_deviation(const QRatFunc& lhs, const QRatFunc& rhs) {
  if (lhs == rhs) return 0.0;
  try {
    return std::abs(to_double((lhs - rhs).eval(BigRat(1, 2))));
  } catch (const PoleError&) {
    return INFINITY;
  }
}

IdentityReport exact_report(Identity id, std::vector<std::pair<std::string, std::string>> params,
                            const QRatFunc& lhs, const QRatFunc& rhs) {
  IdentityReport rep;
  rep.identity = id;
  rep.params = std::move(params);
  rep.lhs = lhs.to_string();
  rep.rhs = rhs.to_string();
  rep.exact = true;
  rep.equal = lhs == rhs;
  rep.deviation = exact_deviation(lhs, rhs);
  return rep;
}

// QRatFunc whose denominator is a power of q, split as num * q^(-k).
std::pair<QPoly, long> split_monomial_den(const QRatFunc& f) {
  if (!f.den().is_monomial()) throw DomainError("expected a power of q in the denominator");
  return {f.num(), -f.den().degree()};
}

}  // namespace

void validate(const SymCheckParams& p) {
  if (p.a < 1 || p.b < 1) throw DomainError("a and b must be positive");
  if (p.a % 2 == 0 || p.b % 2 == 0) {
    throw ParityError("symmetry identities need odd a and b (got a = " + std::to_string(p.a) +
                      ", b = " + std::to_string(p.b) + ")");
  }
  if (p.n < 0) throw DomainError("degree n must be >= 0");
  if (p.r < 0) throw DomainError("order r must be >= 0");
  if (p.x < 0) throw DomainError("x must be >= 0");
}

QRatFunc s_sum(long n, long i, long h, long r, long a, long c) {
  if (i < 0 || i > n) throw DomainError("s_sum needs 0 <= i <= n");
  if (r < 0) throw DomainError("order r must be >= 0");
  if (a < 1) throw DomainError("s_sum needs a >= 1");
  if (c < 1) throw DomainError("base exponent c must be >= 1");
  // Group the tuples by j_1 + ... + j_r so each [total]^i is formed once.
  std::vector<MonomialSum> by_total(static_cast<std::size_t>(r * (a - 1) + 1));
  for_each_tuple(a, r, [&](const std::vector<long>& j) {
    const long total = sum_of(j);
    long exp = 0;
    for (std::size_t l = 0; l < j.size(); ++l) {
      exp += (h + n - static_cast<long>(l + 1) - i + 1) * j[l];
    }
    by_total[static_cast<std::size_t>(total)].add(c * exp, total % 2 == 0 ? 1 : -1);
  });
  long base = 0;
  for (const auto& w : by_total) base = std::min(base, w.low());
  QPoly num;
  for (std::size_t total = 0; total < by_total.size(); ++total) {
    if (by_total[total].empty()) continue;
    if (total == 0 && i > 0) continue;  // [0]^i = 0, while [0]^0 = 1
    num += by_total[total].shifted_poly(base) *
           qbracket_poly(static_cast<long>(total), c).pow(static_cast<unsigned long>(i));
  }
  return {num, QPoly::monomial(-base)};
}

QRatFunc thm22_side(Side side, const SymCheckParams& p) {
  validate(p);
  const auto [A, B] = moduli(side, p);
  const EulerClosedForm closed(p.n, p.h, p.r, A);
  // E(N/A) = sum_l coeff(l) q^{N l} / den with N = ABx + B sum j, so the
  // tuple sum collapses to sum_l coeff(l) * G_l with G_l a sum of monomials.
  std::vector<MonomialSum> g(static_cast<std::size_t>(p.n + 1));
  for_each_tuple(A, p.r, [&](const std::vector<long>& j) {
    const long total = sum_of(j);
    const long weight = B * weighted_sum(j, p.h);
    const long N = A * B * p.x + B * total;
    for (long l = 0; l <= p.n; ++l) {
      g[static_cast<std::size_t>(l)].add(weight + N * l, total % 2 == 0 ? 1 : -1);
    }
  });
  long base = 0;
  for (const auto& gl : g) base = std::min(base, gl.low());
  QPoly num;
  for (long l = 0; l <= p.n; ++l) {
    num += closed.coeff(l) * g[static_cast<std::size_t>(l)].shifted_poly(base);
  }
  const QPoly prefactor = (QPoly(1) + QPoly::monomial(B)).pow(static_cast<unsigned long>(p.r)) *
                          qbracket_poly(A).pow(static_cast<unsigned long>(p.n));
  RatFuncSum sum;
  sum.add_shifted(num * prefactor, base, closed.den());
  return sum.result();
}

QRatFunc thm24_side(Side side, const SymCheckParams& p) {
  validate(p);
  const auto [A, B] = moduli(side, p);
  const QPoly bracket_a = qbracket_poly(A);
  const QPoly bracket_b = qbracket_poly(B);
  RatFuncSum sum;
  for (long i = 0; i <= p.n; ++i) {
    const auto [s_num, s_shift] = split_monomial_den(s_sum(p.n, i, p.h, p.r, A, B));
    const QPoly weight = BigRat(binomial(p.n, i)) *
                         (bracket_a.pow(static_cast<unsigned long>(p.n - i)) *
                          bracket_b.pow(static_cast<unsigned long>(i)) * s_num);
    const EulerClosedForm closed(p.n - i, p.h, p.r, A);
    closed.accumulate(sum, A * B * p.x, weight, s_shift);
  }
  return QRatFunc((QPoly(1) + QPoly::monomial(B)).pow(static_cast<unsigned long>(p.r))) *
         sum.result();
}

QRatFunc thm25_side(Side side, long m, long n, long h, long r, long x, long y) {
  if (m < 0 || n < 0) throw DomainError("m and n must be non-negative");
  if (r < 0) throw DomainError("order r must be >= 0");
  if (x < 0 || y < 0) throw DomainError("x and y must be non-negative");
  RatFuncSum sum;
  if (side == Side::kLeft) {
    const QPoly bracket = qbracket_poly(x);
    for (long k = 0; k <= m; ++k) {
      const QPoly weight =
          BigRat(binomial(m, k)) * bracket.pow(static_cast<unsigned long>(m - k));
      EulerClosedForm(n + k, h, r).accumulate(sum, y, weight, (n + k) * x);
    }
  } else {
    const auto [neg_num, neg_shift] = split_monomial_den(qbracket(-x));
    for (long k = 0; k <= n; ++k) {
      const unsigned long e = static_cast<unsigned long>(n - k);
      const QPoly weight = BigRat(binomial(n, k)) * neg_num.pow(e);
      EulerClosedForm(m + k, h, r).accumulate(sum, x + y, weight,
                                              (n - k) * x + static_cast<long>(e) * neg_shift);
    }
  }
  return sum.result();
}

IdentityReport thm22_check(const SymCheckParams& p) {
  return exact_report(Identity::kThm22, sym_params(p), thm22_side(Side::kLeft, p),
                      thm22_side(Side::kRight, p));
}

IdentityReport thm24_check(const SymCheckParams& p) {
  const QRatFunc left = thm24_side(Side::kLeft, p);
  const QRatFunc right = thm24_side(Side::kRight, p);
  IdentityReport rep = exact_report(Identity::kThm24, sym_params(p), left, right);
  if (rep.equal) {
    const QRatFunc left22 = thm22_side(Side::kLeft, p);
    const QRatFunc right22 = thm22_side(Side::kRight, p);
    if (left != left22 || right != right22) {
      rep.equal = false;
      rep.error = "S-sum form differs from the direct symmetric sum";
      rep.deviation = std::max(exact_deviation(left, left22), exact_deviation(right, right22));
    }
  }
  return rep;
}

IdentityReport thm25_check(long m, long n, long h, long r, long x, long y) {
  return exact_report(Identity::kThm25,
                      {{"m", std::to_string(m)},
                       {"n", std::to_string(n)},
                       {"h", std::to_string(h)},
                       {"r", std::to_string(r)},
                       {"x", std::to_string(x)},
                       {"y", std::to_string(y)}},
                      thm25_side(Side::kLeft, m, n, h, r, x, y),
                      thm25_side(Side::kRight, m, n, h, r, x, y));
}

IdentityReport prop23_check(long n, long h, long r, long x, long y) {
  if (x < 0 || y < 0) throw DomainError("x and y must be non-negative");
  const QRatFunc lhs = euler_exact({n, h, r, x + y, 1});
  const QRatFunc rhs = addition_rhs(n, h, r, x, y);
  IdentityReport rep = exact_report(Identity::kProp23,
                                    {{"n", std::to_string(n)},
                                     {"h", std::to_string(h)},
                                     {"r", std::to_string(r)},
                                     {"x", std::to_string(x)},
                                     {"y", std::to_string(y)}},
                                    lhs, rhs);
  const QRatFunc mirrored = addition_rhs_mirrored(n, h, r, x, y);
  if (mirrored != lhs) {
    rep.equal = false;
    rep.error = "mirrored addition form differs";
    rep.deviation = std::max(rep.deviation, exact_deviation(lhs, mirrored));
  }
  return rep;
}

IdentityReport umbral_check(long n, long h, long r, long x) {
  return exact_report(Identity::kUmbral,
                      {{"n", std::to_string(n)},
                       {"h", std::to_string(h)},
                       {"r", std::to_string(r)},
                       {"x", std::to_string(x)}},
                      euler_exact({n, h, r, x, 1}), umbral_expansion(n, h, r, x));
}

std::complex<double> thm21_side(Side side, std::complex<double> s, const SymCheckParams& p,
                                double q, double tol) {
  validate(p);
  if (p.x < 1) throw DomainError("zeta symmetry needs x >= 1");
  if (!(q > 0.0 && q < 1.0)) throw DomainError("numeric q must lie in (0, 1)");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const auto [A, B] = moduli(side, p);
  const long double log_q = std::log(static_cast<long double>(q));
  const double q_inner = static_cast<double>(std::exp(static_cast<long double>(A) * log_q));
  const double q_b = static_cast<double>(std::exp(static_cast<long double>(B) * log_q));
  const std::complex<double> prefactor =
      std::pow(1.0 + q_b, static_cast<double>(p.r)) * std::exp(s * std::log(qnumber(B, q)));

  std::vector<std::pair<double, double>> terms;  // (weight, zeta argument)
  double weight_mass = 0.0;
  for_each_tuple(A, p.r, [&](const std::vector<long>& j) {
    const long total = sum_of(j);
    const double sign = total % 2 == 0 ? 1.0 : -1.0;
    const double w =
        sign * static_cast<double>(std::exp(static_cast<long double>(B * weighted_sum(j, p.h)) * log_q));
    terms.emplace_back(w, static_cast<double>(B * p.x) +
                              static_cast<double>(B * total) / static_cast<double>(A));
    weight_mass += std::abs(w);
  });
  const double inner_tol = tol / (4.0 * std::abs(prefactor) * weight_mass);
  ComplexCompensatedSum sum;
  for (const auto& [w, arg] : terms) {
    sum.add(w * zeta_single_sum({s, arg, p.h, p.r, q_inner, inner_tol}).value);
  }
  return prefactor * sum.value();
}

IdentityReport thm21_check(std::complex<double> s, const SymCheckParams& p, double q, double tol) {
  IdentityReport rep;
  rep.identity = Identity::kThm21;
  rep.exact = false;
  rep.params = {{"a", std::to_string(p.a)}, {"b", std::to_string(p.b)},
                {"h", std::to_string(p.h)}, {"r", std::to_string(p.r)},
                {"x", std::to_string(p.x)}, {"s", format_complex(s)},
                {"q", format_real(q)},      {"tol", format_real(tol)}};
  const std::complex<double> lhs = thm21_side(Side::kLeft, s, p, q, tol);
  const std::complex<double> rhs = thm21_side(Side::kRight, s, p, q, tol);
  rep.lhs = format_complex(lhs);
  rep.rhs = format_complex(rhs);
  rep.deviation = std::abs(lhs - rhs);
  rep.equal = rep.deviation <= tol;
  return rep;
}

IdentityReport thm21_integer_point_check(Side side, long n, const SymCheckParams& p, double q,
                                         double tol) {
  if (n < 0) throw DomainError("degree n must be >= 0");
  SymCheckParams exact_params = p;
  exact_params.n = n;
  const double scale = std::pow(qnumber(static_cast<double>(p.a), q) *
                                    qnumber(static_cast<double>(p.b), q),
                                static_cast<double>(n));
  const std::complex<double> numeric =
      scale * thm21_side(side, {-static_cast<double>(n), 0.0}, p, q, tol / (2.0 * scale));
  const double exact = to_double(thm22_side(side, exact_params).eval(BigRat(q)));
  IdentityReport rep;
  rep.identity = Identity::kThm21;
  rep.exact = false;
  rep.params = sym_params(exact_params);
  rep.params.emplace_back("side", side == Side::kLeft ? "left" : "right");
  rep.params.emplace_back("q", format_real(q));
  rep.lhs = format_complex(numeric);
  rep.rhs = format_real(exact);
  rep.deviation = std::abs(numeric - std::complex<double>(exact, 0.0));
  rep.equal = rep.deviation <= tol;
  return rep;
}

std::vector<std::string> grid_parameters(Identity id) {
  switch (id) {
    case Identity::kThm21:
      return {"a", "b", "h", "r", "x"};
    case Identity::kThm22:
    case Identity::kThm24:
      return {"a", "b", "n", "h", "r", "x"};
    case Identity::kThm25:
      return {"m", "n", "h", "r", "x", "y"};
    case Identity::kProp23:
      return {"n", "h", "r", "x", "y"};
    case Identity::kUmbral:
      return {"n", "h", "r", "x"};
    case Identity::kLemma11:
      return {"n", "x", "h", "r"};
  }
  return {};
}

namespace {

struct GridPoint {
  std::vector<long> values;
  double q = 0.0;
  std::complex<double> s;
};

bool uses_q(Identity id) { return id == Identity::kThm21 || id == Identity::kLemma11; }

IdentityReport evaluate_point(Identity id, const GridPoint& pt, double tol) {
  const auto& v = pt.values;
  switch (id) {
    case Identity::kThm21:
      return thm21_check(pt.s, {v[0], v[1], 0, v[2], v[3], v[4]}, pt.q, tol);
    case Identity::kThm22:
      return thm22_check({v[0], v[1], v[2], v[3], v[4], v[5]});
    case Identity::kThm24:
      return thm24_check({v[0], v[1], v[2], v[3], v[4], v[5]});
    case Identity::kThm25:
      return thm25_check(v[0], v[1], v[2], v[3], v[4], v[5]);
    case Identity::kProp23:
      return prop23_check(v[0], v[1], v[2], v[3], v[4]);
    case Identity::kUmbral:
      return umbral_check(v[0], v[1], v[2], v[3]);
    case Identity::kLemma11:
      return lemma_1_1_check(v[0], v[1], v[2], v[3], pt.q, tol);
  }
  throw DomainError("unknown identity");
}

IdentityReport failed_report(Identity id, const std::vector<std::string>& names,
                             const GridPoint& pt, double tol, std::string message) {
  IdentityReport rep;
  rep.identity = id;
  rep.exact = !uses_q(id);
  for (std::size_t k = 0; k < names.size(); ++k) {
    rep.params.emplace_back(names[k], std::to_string(pt.values[k]));
  }
  if (id == Identity::kThm21) rep.params.emplace_back("s", format_complex(pt.s));
  if (uses_q(id)) {
    rep.params.emplace_back("q", format_real(pt.q));
    rep.params.emplace_back("tol", format_real(tol));
  }
  rep.equal = false;
  rep.deviation = INFINITY;
  rep.error = std::move(message);
  return rep;
}

}  // namespace

std::vector<IdentityReport> verify_grid(const GridSpec& spec, unsigned jobs) {
  const std::vector<std::string> names = grid_parameters(spec.identity);
  std::vector<std::vector<long>> axes;
  for (const auto& name : names) {
    auto it = spec.ranges.find(name);
    if (it == spec.ranges.end()) {
      throw DomainError("grid for " + std::string(identity_name(spec.identity)) +
                        " is missing parameter '" + name + "'");
    }
    std::vector<long> axis = it->second;
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
    axes.push_back(std::move(axis));
  }
  std::vector<double> qs = uses_q(spec.identity) ? spec.q : std::vector<double>{0.0};
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  std::vector<std::complex<double>> ss =
      spec.identity == Identity::kThm21 ? spec.s : std::vector<std::complex<double>>{{}};
  std::sort(ss.begin(), ss.end(), [](auto l, auto r) {
    return std::pair{l.real(), l.imag()} < std::pair{r.real(), r.imag()};
  });
  ss.erase(std::unique(ss.begin(), ss.end()), ss.end());

  std::vector<GridPoint> points;
  bool empty = qs.empty() || ss.empty();
  for (const auto& axis : axes) empty = empty || axis.empty();
  if (!empty) {
    std::vector<std::size_t> idx(axes.size(), 0);
    bool done = false;
    while (!done) {
      std::vector<long> values;
      for (std::size_t k = 0; k < axes.size(); ++k) values.push_back(axes[k][idx[k]]);
      for (double q : qs) {
        for (auto s : ss) points.push_back({values, q, s});
      }
      done = true;
      for (std::size_t pos = axes.size(); pos-- > 0;) {
        if (++idx[pos] < axes[pos].size()) {
          done = false;
          break;
        }
        idx[pos] = 0;
      }
    }
  }

  std::vector<IdentityReport> reports(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < points.size(); k = next++) {
      try {
        reports[k] = evaluate_point(spec.identity, points[k], spec.tol);
      } catch (const std::exception& e) {
        reports[k] = failed_report(spec.identity, names, points[k], spec.tol, e.what());
      }
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(points.size())));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return reports;
}

}  // namespace qeuler
