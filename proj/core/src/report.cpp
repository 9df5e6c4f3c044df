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

#include "qeuler/report.hpp"

#include <array>
#include <charconv>

namespace qeuler {

namespace {

constexpr std::array<std::pair<Identity, std::string_view>, 7> kNames{{
    {Identity::kThm21, "thm2.1"},
    {Identity::kThm22, "thm2.2"},
    {Identity::kThm24, "thm2.4"},
    {Identity::kThm25, "thm2.5"},
    {Identity::kProp23, "prop2.3"},
    {Identity::kUmbral, "eq1.7"},
    {Identity::kLemma11, "lemma1.1"},
}};

}  // namespace

std::string_view identity_name(Identity id) {
  for (const auto& [key, name] : kNames) {
    if (key == id) return name;
  }
  return "unknown";
}

std::optional<Identity> parse_identity(std::string_view name) {
  for (const auto& [key, known] : kNames) {
    if (known == name) return key;
  }
  return std::nullopt;
}

std::string format_real(double v) {
  std::array<char, 40> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string format_complex(std::complex<double> v) {
  std::string out = format_real(v.real());
  const std::string im = format_real(v.imag());
  if (im.front() != '-') out += '+';
  out += im;
  out += 'i';
  return out;
}

}  // namespace qeuler
