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

#ifndef QEULER_TOOLS_CLI_HPP
#define QEULER_TOOLS_CLI_HPP

#include <complex>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qeuler/qratfunc.hpp"

namespace qeuler::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInvalid = 2;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// {"num": [[exp, "p/r"], ...], "den": [...]}, exponents ascending.
nlohmann::json ratfunc_to_json(const QRatFunc& f);
/// Inverse of ratfunc_to_json; the result is re-canonicalized.
QRatFunc ratfunc_from_json(const nlohmann::json& j);

/// "2", "-1.5", "2+1i", "0.5-3i", "i", "-2i".
std::complex<double> parse_complex(std::string_view text);

/// "1,3,5", "0..6", "-1..3,7", or "" for the empty list. Duplicates are dropped
/// and the result is sorted.
std::vector<long> parse_long_list(std::string_view text);
std::vector<double> parse_double_list(std::string_view text);
std::vector<std::complex<double>> parse_complex_list(std::string_view text);

}  // namespace qeuler::cli

#endif  // QEULER_TOOLS_CLI_HPP
