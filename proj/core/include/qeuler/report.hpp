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

#ifndef QEULER_REPORT_HPP
#define QEULER_REPORT_HPP

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qeuler {

enum class Identity {
  kThm21,    // numeric symmetry of the multiple q-Euler zeta function
  kThm22,    // exact symmetry of E_{n,q^a}
  kThm24,    // S-sum form of the symmetry
  kThm25,    // two-index shift identity
  kProp23,   // addition theorem
  kUmbral,   // E_n(x) = (q^x E + [x])^n
  kLemma11,  // zeta(-n, x) = E_n(x)
};

/// Command-line names: "thm2.1", "thm2.2", ..., "eq1.7", "lemma1.1".
std::string_view identity_name(Identity id);
std::optional<Identity> parse_identity(std::string_view name);

struct IdentityReport {
  Identity identity = Identity::kThm22;
  /// Parameter name/value pairs in the identity's canonical order.
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs;
  std::string rhs;
  bool exact = true;
  bool equal = false;
  /// 0 for exact checks that hold; |lhs - rhs| for numeric checks.
  double deviation = 0.0;
  /// Set when the point could not be evaluated (domain or parity errors).
  std::string error;

  bool passed() const { return equal && error.empty(); }
};

/// Shortest decimal that reads back to the same double.
std::string format_real(double v);
/// "re+imi" / "re-imi" with both parts in format_real form.
std::string format_complex(std::complex<double> v);

}  // namespace qeuler

#endif  // QEULER_REPORT_HPP
