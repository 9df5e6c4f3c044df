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

#ifndef QEULER_IDENTITIES_HPP
#define QEULER_IDENTITIES_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "qeuler/qratfunc.hpp"
#include "qeuler/report.hpp"

namespace qeuler {

/// Parameters shared by the (a, b) symmetry identities; a and b must be odd.
struct SymCheckParams {
  long a = 1;
  long b = 1;
  long n = 0;
  long h = 0;
  long r = 0;
  long x = 0;
};

/// Throws ParityError when a or b is even, DomainError for other bad fields.
void validate(const SymCheckParams& p);

enum class Side { kLeft, kRight };

/// Alternating q-power sum
///   sum_{j in [0,a)^r} (-1)^{sum j} q^{c sum_l (h+n-l-i+1) j_l} [j_1+...+j_r]_{q^c}^i
/// with 0^0 = 1.
QRatFunc s_sum(long n, long i, long h, long r, long a, long c = 1);

/// [2]_{q^b}^r [a]_q^n sum_j (-1)^{sum j} q^{b sum (h-l+1) j_l} E_{n,q^a}(bx + b(sum j)/a);
/// the right side swaps a and b.
QRatFunc thm22_side(Side side, const SymCheckParams& p);

/// [2]_{q^b}^r sum_i C(n,i) [a]_q^{n-i} [b]_q^i E_{n-i,q^a}(bx) S_{n,i,q^b}(a);
/// the right side swaps a and b.
QRatFunc thm24_side(Side side, const SymCheckParams& p);

/// Left:  sum_{k<=m} C(m,k) q^{(n+k)x} E_{n+k}(y) [x]_q^{m-k}
/// Right: sum_{k<=n} C(n,k) E_{m+k}(x+y) q^{(n-k)x} [-x]_q^{n-k}
QRatFunc thm25_side(Side side, long m, long n, long h, long r, long x, long y);

IdentityReport thm22_check(const SymCheckParams& p);
/// Also compares each side with the matching thm22 side.
IdentityReport thm24_check(const SymCheckParams& p);
IdentityReport thm25_check(long m, long n, long h, long r, long x, long y);
/// E_n(x+y) against both forms of the addition theorem.
IdentityReport prop23_check(long n, long h, long r, long x, long y);
/// E_n(x) against sum_l C(n,l) q^{lx} E_l(0) [x]_q^{n-l}.
IdentityReport umbral_check(long n, long h, long r, long x);

/// One side of the zeta symmetry evaluated numerically:
///   [2]_{q^b}^r [b]_q^s sum_{j in [0,a)^r} (-1)^{sum j} q^{b sum (h-l+1) j_l}
///     zeta_{q^a,r}^{(h)}(s, bx + b(sum j)/a)
/// with each inner series truncated so the side is accurate to tol / 4.
std::complex<double> thm21_side(Side side, std::complex<double> s, const SymCheckParams& p,
                                double q, double tol);

/// Numeric zeta symmetry at complex s; passes when |lhs - rhs| <= tol.
/// Needs h >= r and x >= 1.
IdentityReport thm21_check(std::complex<double> s, const SymCheckParams& p, double q, double tol);

/// At s = -n the zeta side times ([a]_q [b]_q)^n equals the exact thm22 side
/// at the same q. Passes when they agree within tol.
IdentityReport thm21_integer_point_check(Side side, long n, const SymCheckParams& p, double q,
                                         double tol);

/// Cartesian grid of parameter values for one identity.
struct GridSpec {
  Identity identity = Identity::kThm22;
  std::map<std::string, std::vector<long>> ranges;
  std::vector<double> q;
  std::vector<std::complex<double>> s;
  double tol = 1e-8;
};

/// Integer parameter names the identity's grid iterates over, in order.
std::vector<std::string> grid_parameters(Identity id);

/// One report per grid point in lexicographic parameter order (then q, then
/// s). Errors at a point become failed reports. jobs > 1 evaluates points on
/// a thread pool; the output does not depend on it.
/// Throws DomainError when a required range is missing.
std::vector<IdentityReport> verify_grid(const GridSpec& spec, unsigned jobs = 1);

}  // namespace qeuler

#endif  // QEULER_IDENTITIES_HPP
