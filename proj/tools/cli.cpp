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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/identities.hpp"
#include "qeuler/zeta.hpp"

namespace qeuler::cli {

using nlohmann::json;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

long parse_long(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("invalid integer '" + std::string(s) + "'");
  }
  return v;
}

double parse_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ParseError("invalid number '" + std::string(s) + "'");
  }
  return v;
}

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty complex number");
  if (s.back() != 'i') return {parse_double(s), 0.0};
  const std::string_view body = s.substr(0, s.size() - 1);
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split_at = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  const std::string_view re = split_at == std::string_view::npos ? "" : body.substr(0, split_at);
  std::string_view im = split_at == std::string_view::npos ? body : body.substr(split_at);
  double im_value = 0;
  if (im.empty() || im == "+") {
    im_value = 1;
  } else if (im == "-") {
    im_value = -1;
  } else {
    im_value = parse_double(im);
  }
  return {re.empty() ? 0.0 : parse_double(re), im_value};
}

std::vector<long> parse_long_list(std::string_view text) {
  std::vector<long> out;
  if (trim(text).empty()) return out;
  for (std::string_view item : split(text, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_long(item));
      continue;
    }
    const long lo = parse_long(item.substr(0, dots));
    const long hi = parse_long(item.substr(dots + 2));
    if (hi - lo > 100000) throw ParseError("range '" + std::string(item) + "' is too large");
    for (long v = lo; v <= hi; ++v) out.push_back(v);
  }
  sort_unique(out);
  return out;
}

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  for (std::string_view item : split(text, ',')) out.push_back(parse_double(item));
  sort_unique(out);
  return out;
}

std::vector<std::complex<double>> parse_complex_list(std::string_view text) {
  std::vector<std::complex<double>> out;
  if (trim(text).empty()) return out;
  for (std::string_view item : split(text, ',')) out.push_back(parse_complex(item));
  std::sort(out.begin(), out.end(), [](auto l, auto r) {
    return std::pair{l.real(), l.imag()} < std::pair{r.real(), r.imag()};
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

json poly_to_json(const QPoly& p) {
  json arr = json::array();
  for (const auto& t : p.terms()) arr.push_back(json::array({t.exp, to_string(t.coeff)}));
  return arr;
}

QPoly poly_from_json(const json& arr) {
  if (!arr.is_array()) throw ParseError("polynomial must be a JSON array");
  std::vector<QPoly::Term> terms;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string()) {
      throw ParseError("polynomial term must be [exp, \"p/r\"]");
    }
    const long e = t[0].get<long>();
    if (e < 0) throw ParseError("polynomial exponents must be >= 0");
    terms.push_back({e, parse_rat(t[1].get<std::string>())});
  }
  return QPoly::from_terms(std::move(terms));
}

}  // namespace

json ratfunc_to_json(const QRatFunc& f) {
  return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

QRatFunc ratfunc_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw ParseError("rational function must have \"num\" and \"den\"");
  }
  return QRatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

namespace {

using Value = std::variant<long, double, BigRat, std::complex<double>, QRatFunc, std::string>;

std::string to_text(const Value& v) {
  struct Visitor {
    std::string operator()(long x) const { return std::to_string(x); }
    std::string operator()(double x) const { return format_real(x); }
    std::string operator()(const BigRat& x) const { return to_string(x); }
    std::string operator()(std::complex<double> x) const { return format_complex(x); }
    std::string operator()(const QRatFunc& x) const { return x.to_string(); }
    std::string operator()(const std::string& x) const { return x; }
  };
  return std::visit(Visitor{}, v);
}

json to_json(const Value& v) {
  struct Visitor {
    json operator()(long x) const { return x; }
    json operator()(double x) const { return x; }
    json operator()(const BigRat& x) const { return to_string(x); }
    json operator()(std::complex<double> x) const { return json{{"re", x.real()}, {"im", x.imag()}}; }
    json operator()(const QRatFunc& x) const { return ratfunc_to_json(x); }
    json operator()(const std::string& x) const { return x; }
  };
  return std::visit(Visitor{}, v);
}

enum class Format { kText, kJson, kCsv };

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

void write_csv(const Table& t, std::ostream& out) {
  for (std::size_t k = 0; k < t.columns.size(); ++k) out << (k ? "," : "") << t.columns[k];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << to_text(row[k]);
    out << '\n';
  }
}

void write_aligned(const Table& t, std::ostream& out) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back(t.columns);
  for (const auto& row : t.rows) {
    std::vector<std::string> line;
    for (const auto& v : row) line.push_back(to_text(v));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(t.columns.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t k = 0; k < line.size(); ++k) width[k] = std::max(width[k], line[k].size());
  }
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (k) text += "  ";
      text += line[k];
      if (k + 1 < line.size()) text.append(width[k] - line[k].size(), ' ');
    }
    out << text << '\n';
  }
}

json row_object(const Table& t, const std::vector<Value>& row) {
  json obj = json::object();
  for (std::size_t k = 0; k < row.size(); ++k) obj[t.columns[k]] = to_json(row[k]);
  return obj;
}

// Single-result commands: one row whose last `value_columns` cells are results.
void write_single(const std::string& command, const Table& t, std::size_t value_columns,
                  Format fmt, std::ostream& out) {
  const auto& row = t.rows.front();
  const std::size_t first_value = row.size() - value_columns;
  switch (fmt) {
    case Format::kText:
      out << to_text(row[first_value]) << '\n';
      break;
    case Format::kCsv:
      write_csv(t, out);
      break;
    case Format::kJson: {
      json params = json::object();
      for (std::size_t k = 0; k < first_value; ++k) params[t.columns[k]] = to_json(row[k]);
      json doc{{"command", command}, {"params", params}};
      for (std::size_t k = first_value; k < row.size(); ++k) doc[t.columns[k]] = to_json(row[k]);
      out << doc.dump() << '\n';
      break;
    }
  }
}

void write_table(const std::string& kind, const Table& t, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::kText:
      write_aligned(t, out);
      break;
    case Format::kCsv:
      write_csv(t, out);
      break;
    case Format::kJson: {
      json rows = json::array();
      for (const auto& row : t.rows) rows.push_back(row_object(t, row));
      const json doc{{"command", "table"}, {"kind", kind}, {"columns", t.columns}, {"rows", rows}};
      out << doc.dump() << '\n';
      break;
    }
  }
}

// "N/c" with c defaulting to 1; not reduced, since c selects the base q^c.
std::pair<long, long> parse_arg(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_long(text), 1};
  return {parse_long(text.substr(0, slash)), parse_long(text.substr(slash + 1))};
}

void require_nonneg(long v, const char* name) {
  if (v < 0) throw DomainError(std::string(name) + " must be >= 0 (got " + std::to_string(v) + ")");
}

void require_positive(long v, const char* name) {
  if (v < 1) throw DomainError(std::string(name) + " must be >= 1 (got " + std::to_string(v) + ")");
}

void require_unit_q(double q) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("q must lie in (0, 1) (got " + format_real(q) + ")");
}

void require_tol(double tol) {
  if (!(tol > 0.0)) throw DomainError("tol must be positive (got " + format_real(tol) + ")");
}

void require_convergent(long h, long r) {
  if (h < r) {
    throw ConvergenceDomainError("series needs h >= r for convergence (got h = " + std::to_string(h) +
                                 ", r = " + std::to_string(r) + ")");
  }
}

void require_odd(long v, const char* name) {
  if (v < 1 || v % 2 == 0) {
    throw ParityError(std::string(name) + " must be a positive odd integer (got " +
                      std::to_string(v) + ")");
  }
}

// ---- euler / ssum / zeta ------------------------------------------------

struct EulerArgs {
  long n = 0;
  long h = 0;
  long r = 0;
  std::string arg;
  std::string at;
};

Table cmd_euler(const EulerArgs& a) {
  const auto [N, c] = parse_arg(a.arg);
  const EulerParams p{a.n, a.h, a.r, N, c};
  validate(p);
  const QRatFunc f = euler_exact(p);
  Table t{{"n", "h", "r", "N", "c"}, {{a.n, a.h, a.r, N, c}}};
  if (a.at.empty()) {
    t.columns.emplace_back("value");
    t.rows[0].emplace_back(f);
  } else {
    const BigRat q0 = parse_rat(a.at);
    t.columns.insert(t.columns.end(), {"q", "value"});
    t.rows[0].emplace_back(q0);
    t.rows[0].emplace_back(f.eval(q0));
  }
  return t;
}

struct SsumArgs {
  long n = 0;
  long i = 0;
  long h = 0;
  long r = 0;
  long a = 1;
  long c = 1;
  std::string at;
};

void validate_ssum(long n, long i, long r, long a, long c) {
  require_nonneg(n, "n");
  if (i < 0 || i > n) throw DomainError("i must satisfy 0 <= i <= n");
  require_nonneg(r, "r");
  require_positive(a, "a");
  require_positive(c, "c");
}

Table cmd_ssum(const SsumArgs& s) {
  validate_ssum(s.n, s.i, s.r, s.a, s.c);
  const QRatFunc f = s_sum(s.n, s.i, s.h, s.r, s.a, s.c);
  Table t{{"n", "i", "h", "r", "a", "c"}, {{s.n, s.i, s.h, s.r, s.a, s.c}}};
  if (s.at.empty()) {
    t.columns.emplace_back("value");
    t.rows[0].emplace_back(f);
  } else {
    const BigRat q0 = parse_rat(s.at);
    t.columns.insert(t.columns.end(), {"q", "value"});
    t.rows[0].emplace_back(q0);
    t.rows[0].emplace_back(f.eval(q0));
  }
  return t;
}

struct ZetaArgs {
  std::string s;
  double x = 1.0;
  long h = 0;
  long r = 0;
  double q = 0.5;
  double tol = 1e-10;
  long multi = 0;
};

Table cmd_zeta(const ZetaArgs& z) {
  const ZetaQuery query{parse_complex(z.s), z.x, z.h, z.r, z.q, z.tol};
  require_tol(z.tol);
  const ComplexSeriesValue v = z.multi > 0 ? zeta_multi_sum(query, z.multi) : zeta_single_sum(query);
  return Table{{"s", "x", "h", "r", "q", "value", "tail_bound", "terms"},
               {{query.s, z.x, z.h, z.r, z.q, v.value, v.tail_bound, v.terms}}};
}

// ---- table --------------------------------------------------------------

struct TableArgs {
  std::string kind;
  std::map<std::string, std::string> lists;  // option name -> raw list text
  std::string at;
  double tol = 1e-10;
};

const std::vector<long>& axis(const std::map<std::string, std::vector<long>>& axes,
                              const std::string& name) {
  return axes.at(name);
}

// Visits the lexicographic product of the given axes.
template <typename Fn>
void for_each_point(const std::vector<std::vector<long>>& axes, Fn fn) {
  for (const auto& a : axes) {
    if (a.empty()) return;
  }
  std::vector<std::size_t> idx(axes.size(), 0);
  std::vector<long> values(axes.size());
  while (true) {
    for (std::size_t k = 0; k < axes.size(); ++k) values[k] = axes[k][idx[k]];
    fn(values);
    std::size_t pos = axes.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < axes[pos].size()) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
    if (axes.empty()) return;
  }
}

std::map<std::string, std::vector<long>> integer_axes(const TableArgs& a,
                                                      const std::vector<std::string>& names,
                                                      const std::map<std::string, std::string>& defaults) {
  std::map<std::string, std::vector<long>> out;
  for (const auto& name : names) {
    auto it = a.lists.find(name);
    if (it != a.lists.end()) {
      out[name] = parse_long_list(it->second);
    } else if (auto d = defaults.find(name); d != defaults.end()) {
      out[name] = parse_long_list(d->second);
    } else {
      throw UsageError("table " + a.kind + " needs --" + name);
    }
  }
  return out;
}

void reject_unused(const TableArgs& a, const std::vector<std::string>& allowed) {
  for (const auto& [name, text] : a.lists) {
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
      throw UsageError("option --" + name + " does not apply to table " + a.kind);
    }
  }
}

Table table_euler(const TableArgs& a) {
  reject_unused(a, {"n", "h", "r", "x", "c"});
  const std::vector<std::string> names{"n", "h", "r", "x", "c"};
  const auto axes = integer_axes(a, names, {{"c", "1"}});
  for (long v : axis(axes, "n")) require_nonneg(v, "n");
  for (long v : axis(axes, "r")) require_nonneg(v, "r");
  for (long v : axis(axes, "c")) require_positive(v, "c");
  std::optional<BigRat> q0;
  if (!a.at.empty()) q0 = parse_rat(a.at);
  Table t{names, {}};
  if (q0) t.columns.emplace_back("q");
  t.columns.emplace_back("value");
  std::vector<std::vector<long>> order;
  for (const auto& n : names) order.push_back(axes.at(n));
  for_each_point(order, [&](const std::vector<long>& v) {
    const QRatFunc f = euler_exact({v[0], v[1], v[2], v[3], v[4]});
    std::vector<Value> row(v.begin(), v.end());
    if (q0) {
      row.emplace_back(*q0);
      row.emplace_back(f.eval(*q0));
    } else {
      row.emplace_back(f);
    }
    t.rows.push_back(std::move(row));
  });
  return t;
}

Table table_ssum(const TableArgs& a) {
  reject_unused(a, {"n", "i", "h", "r", "a", "c"});
  const std::vector<std::string> names{"n", "i", "h", "r", "a", "c"};
  const auto axes = integer_axes(a, names, {{"c", "1"}});
  for (long v : axis(axes, "n")) require_nonneg(v, "n");
  for (long v : axis(axes, "i")) require_nonneg(v, "i");
  for (long v : axis(axes, "r")) require_nonneg(v, "r");
  for (long v : axis(axes, "a")) require_positive(v, "a");
  for (long v : axis(axes, "c")) require_positive(v, "c");
  std::optional<BigRat> q0;
  if (!a.at.empty()) q0 = parse_rat(a.at);
  Table t{names, {}};
  if (q0) t.columns.emplace_back("q");
  t.columns.emplace_back("value");
  std::vector<std::vector<long>> order;
  for (const auto& n : names) order.push_back(axes.at(n));
  for_each_point(order, [&](const std::vector<long>& v) {
    if (v[1] > v[0]) return;  // the sum is defined for i <= n only
    const QRatFunc f = s_sum(v[0], v[1], v[2], v[3], v[4], v[5]);
    std::vector<Value> row(v.begin(), v.end());
    if (q0) {
      row.emplace_back(*q0);
      row.emplace_back(f.eval(*q0));
    } else {
      row.emplace_back(f);
    }
    t.rows.push_back(std::move(row));
  });
  return t;
}

std::string list_or_throw(const TableArgs& a, const std::string& name) {
  auto it = a.lists.find(name);
  if (it == a.lists.end()) throw UsageError("table " + a.kind + " needs --" + name);
  return it->second;
}

Table table_zeta(const TableArgs& a) {
  reject_unused(a, {"s", "x", "h", "r", "q"});
  if (!a.at.empty()) throw UsageError("--at does not apply to table zeta");
  require_tol(a.tol);
  const auto s_values = parse_complex_list(list_or_throw(a, "s"));
  const auto x_values = parse_double_list(list_or_throw(a, "x"));
  const auto h_values = parse_long_list(list_or_throw(a, "h"));
  const auto r_values = parse_long_list(list_or_throw(a, "r"));
  const auto q_values = parse_double_list(list_or_throw(a, "q"));
  for (double x : x_values) {
    if (!(x > 0)) throw DomainError("zeta needs x > 0 (got " + format_real(x) + ")");
  }
  for (double q : q_values) require_unit_q(q);
  for (long r : r_values) require_nonneg(r, "r");
  for (long h : h_values) {
    for (long r : r_values) require_convergent(h, r);
  }
  Table t{{"s", "x", "h", "r", "q", "value"}, {}};
  for (auto s : s_values) {
    for (double x : x_values) {
      for (long h : h_values) {
        for (long r : r_values) {
          for (double q : q_values) {
            const auto v = zeta_single_sum({s, x, h, r, q, a.tol});
            t.rows.push_back({s, x, h, r, q, v.value});
          }
        }
      }
    }
  }
  return t;
}

// ---- verify -------------------------------------------------------------

struct VerifyArgs {
  std::string identity;
  std::map<std::string, std::string> lists;
  std::string q;
  std::string s;
  std::optional<double> tol;
  std::string config;
  std::optional<long> jobs;
};

std::vector<long> json_long_list(const json& v, const std::string& name) {
  if (v.is_number_integer()) return {v.get<long>()};
  if (v.is_string()) return parse_long_list(v.get<std::string>());
  if (!v.is_array()) throw ParseError("range for '" + name + "' must be a list, integer or string");
  std::vector<long> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw ParseError("range for '" + name + "' must hold integers");
    out.push_back(e.get<long>());
  }
  sort_unique(out);
  return out;
}

std::vector<double> json_double_list(const json& v) {
  if (v.is_number()) return {v.get<double>()};
  if (v.is_string()) return parse_double_list(v.get<std::string>());
  if (!v.is_array()) throw ParseError("\"q\" must be a number or a list");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) throw ParseError("\"q\" must hold numbers");
    out.push_back(e.get<double>());
  }
  sort_unique(out);
  return out;
}

std::complex<double> json_complex(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_string()) return parse_complex(e.get<std::string>());
  if (e.is_object() && e.contains("re") && e.contains("im")) {
    return {e.at("re").get<double>(), e.at("im").get<double>()};
  }
  throw ParseError("complex values must be numbers, strings or {\"re\", \"im\"}");
}

GridSpec load_config(const std::string& path, std::string& identity) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("config '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw ParseError("config must be a JSON object");
  GridSpec spec;
  if (doc.contains("identity")) {
    const std::string id = doc.at("identity").get<std::string>();
    if (!identity.empty() && identity != id) {
      throw UsageError("identity '" + identity + "' conflicts with config identity '" + id + "'");
    }
    identity = id;
  }
  if (doc.contains("ranges")) {
    if (!doc.at("ranges").is_object()) throw ParseError("\"ranges\" must be an object");
    for (const auto& [k, v] : doc.at("ranges").items()) spec.ranges[k] = json_long_list(v, k);
  }
  if (doc.contains("q")) spec.q = json_double_list(doc.at("q"));
  if (doc.contains("s")) {
    const json& s = doc.at("s");
    if (s.is_array()) {
      for (const auto& e : s) spec.s.push_back(json_complex(e));
    } else {
      spec.s.push_back(json_complex(s));
    }
  }
  if (doc.contains("tol")) spec.tol = doc.at("tol").get<double>();
  return spec;
}

bool numeric_identity(Identity id) { return id == Identity::kThm21 || id == Identity::kLemma11; }

void validate_grid(const GridSpec& spec) {
  const Identity id = spec.identity;
  const auto names = grid_parameters(id);
  for (const auto& [k, v] : spec.ranges) {
    if (std::find(names.begin(), names.end(), k) == names.end()) {
      throw UsageError("parameter '" + k + "' does not apply to " + std::string(identity_name(id)));
    }
  }
  for (const auto& name : names) {
    if (!spec.ranges.count(name)) {
      throw UsageError(std::string(identity_name(id)) + " needs a value for '" + name + "'");
    }
  }
  const auto values = [&](const char* n) -> const std::vector<long>& { return spec.ranges.at(n); };
  const auto has = [&](const char* n) { return spec.ranges.count(n) > 0; };
  if (has("a")) for (long v : values("a")) require_odd(v, "a");
  if (has("b")) for (long v : values("b")) require_odd(v, "b");
  for (const char* n : {"n", "m", "r", "y"}) {
    if (has(n)) for (long v : values(n)) require_nonneg(v, n);
  }
  if (has("x")) {
    for (long v : values("x")) {
      if (numeric_identity(id)) {
        if (v < 1) throw DomainError("x must be >= 1 for zeta checks (got " + std::to_string(v) + ")");
      } else {
        require_nonneg(v, "x");
      }
    }
  }
  if (numeric_identity(id)) {
    if (spec.q.empty()) throw UsageError(std::string(identity_name(id)) + " needs --q");
    for (double q : spec.q) require_unit_q(q);
    require_tol(spec.tol);
    for (long h : values("h")) {
      for (long r : values("r")) require_convergent(h, r);
    }
  } else if (!spec.q.empty()) {
    throw UsageError("--q does not apply to exact identity " + std::string(identity_name(id)));
  }
  if (id == Identity::kThm21) {
    if (spec.s.empty()) throw UsageError("thm2.1 needs --s");
  } else if (!spec.s.empty()) {
    throw UsageError("--s applies to thm2.1 only");
  }
}

unsigned resolve_jobs(const std::optional<long>& flag) {
  long jobs = 1;
  if (flag) {
    jobs = *flag;
  } else if (const char* env = std::getenv("QEULER_JOBS"); env != nullptr && *env != '\0') {
    try {
      jobs = parse_long(env);
    } catch (const ParseError&) {
      throw UsageError(std::string("QEULER_JOBS must be a positive integer (got '") + env + "')");
    }
  }
  if (jobs < 1 || jobs > 1024) throw UsageError("--jobs must lie in 1..1024");
  return static_cast<unsigned>(jobs);
}

void write_reports(const GridSpec& spec, const std::vector<IdentityReport>& reports, Format fmt,
                   std::ostream& out) {
  const std::size_t passed = static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); }));
  const std::string name(identity_name(spec.identity));
  switch (fmt) {
    case Format::kText: {
      for (const auto& rep : reports) {
        out << (rep.passed() ? "PASS" : "FAIL") << ' ' << name;
        for (const auto& [k, v] : rep.params) out << ' ' << k << '=' << v;
        if (!rep.exact && rep.error.empty()) out << " deviation=" << format_real(rep.deviation);
        if (!rep.error.empty()) out << " error: " << rep.error;
        out << '\n';
      }
      out << passed << '/' << reports.size() << " passed\n";
      break;
    }
    case Format::kCsv: {
      std::vector<std::string> columns;
      if (!reports.empty()) {
        for (const auto& [k, v] : reports.front().params) columns.push_back(k);
      } else {
        columns = grid_parameters(spec.identity);
      }
      columns.insert(columns.end(), {"exact", "equal", "deviation", "status"});
      Table t{columns, {}};
      for (const auto& rep : reports) {
        std::vector<Value> row;
        for (const auto& [k, v] : rep.params) row.emplace_back(v);
        row.emplace_back(std::string(rep.exact ? "true" : "false"));
        row.emplace_back(std::string(rep.equal ? "true" : "false"));
        row.emplace_back(rep.deviation);
        row.emplace_back(std::string(rep.passed() ? "PASS" : "FAIL"));
        t.rows.push_back(std::move(row));
      }
      write_csv(t, out);
      break;
    }
    case Format::kJson: {
      json items = json::array();
      for (const auto& rep : reports) {
        json params = json::object();
        for (const auto& [k, v] : rep.params) params[k] = v;
        json item{{"params", params},        {"exact", rep.exact},   {"equal", rep.equal},
                  {"passed", rep.passed()},  {"lhs", rep.lhs},       {"rhs", rep.rhs}};
        item["deviation"] = std::isfinite(rep.deviation) ? json(rep.deviation) : json(nullptr);
        if (!rep.error.empty()) item["error"] = rep.error;
        items.push_back(std::move(item));
      }
      const json doc{{"command", "verify"}, {"identity", name},  {"total", reports.size()},
                     {"passed", passed},    {"reports", items}};
      out << doc.dump() << '\n';
      break;
    }
  }
}

int cmd_verify(const VerifyArgs& a, Format fmt, std::ostream& out) {
  std::string identity = a.identity;
  GridSpec spec;
  if (!a.config.empty()) spec = load_config(a.config, identity);
  if (identity.empty()) throw UsageError("verify needs an identity name");
  const auto id = parse_identity(identity);
  if (!id) {
    throw UsageError("unknown identity '" + identity +
                     "' (known: thm2.1, thm2.2, thm2.4, thm2.5, prop2.3, eq1.7, lemma1.1)");
  }
  spec.identity = *id;
  for (const auto& [k, v] : a.lists) spec.ranges[k] = parse_long_list(v);
  if (!a.q.empty()) spec.q = parse_double_list(a.q);
  if (!a.s.empty()) spec.s = parse_complex_list(a.s);
  if (a.tol) spec.tol = *a.tol;
  validate_grid(spec);
  const auto reports = verify_grid(spec, resolve_jobs(a.jobs));
  write_reports(spec, reports, fmt, out);
  const bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  return all ? kExitPass : kExitFail;
}

Format parse_format(const std::string& f) {
  if (f == "json") return Format::kJson;
  if (f == "csv") return Format::kCsv;
  return Format::kText;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric evaluation of (h,q)-Euler polynomials and q-Euler zeta values"};
  app.name(args.empty() ? "qeuler" : args.front());
  // -h is taken by the weight parameter --h, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1, 1);
  std::string format = "text";
  std::string output;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", output, "Write output to this file instead of stdout");

  EulerArgs ea;
  auto* euler = app.add_subcommand("euler", "E_{n,q^c}^{(h,r)}(N/c) as a canonical rational function");
  euler->fallthrough();
  euler->add_option("--n", ea.n, "Degree n >= 0")->required();
  euler->add_option("--h", ea.h, "Weight h")->required();
  euler->add_option("--r", ea.r, "Order r >= 0")->required();
  euler->add_option("--arg", ea.arg, "Argument N/c (base q^c); c defaults to 1")->required();
  euler->add_option("--at", ea.at, "Evaluate exactly at this rational q");

  SsumArgs sa;
  auto* ssum = app.add_subcommand("ssum", "Alternating q-power sum S_{n,i}^{(h,r)}(a) in base q^c");
  ssum->fallthrough();
  ssum->add_option("--n", sa.n)->required();
  ssum->add_option("--i", sa.i)->required();
  ssum->add_option("--h", sa.h)->required();
  ssum->add_option("--r", sa.r)->required();
  ssum->add_option("--a", sa.a)->required();
  ssum->add_option("--c", sa.c)->capture_default_str();
  ssum->add_option("--at", sa.at, "Evaluate exactly at this rational q");

  ZetaArgs za;
  auto* zeta = app.add_subcommand("zeta", "Multiple q-Euler zeta value for complex s");
  zeta->fallthrough();
  zeta->add_option("--s", za.s, "Complex s, e.g. 2+1i")->required();
  zeta->add_option("--x", za.x, "x > 0")->required();
  zeta->add_option("--h", za.h)->required();
  zeta->add_option("--r", za.r)->required();
  zeta->add_option("--q", za.q, "0 < q < 1")->required();
  zeta->add_option("--tol", za.tol)->capture_default_str();
  zeta->add_option("--multi", za.multi, "Use the r-fold sum truncated at M per index");

  VerifyArgs va;
  std::string verify_tol;
  auto* verify = app.add_subcommand("verify", "Check an identity on a parameter grid");
  verify->fallthrough();
  verify->add_option("identity", va.identity,
                     "thm2.1, thm2.2, thm2.4, thm2.5, prop2.3, eq1.7 or lemma1.1");
  std::map<std::string, std::string> verify_lists;
  for (const char* p : {"a", "b", "n", "m", "h", "r", "x", "y"}) {
    verify->add_option(std::string("--") + p, verify_lists[p], "List such as 1,3,5 or range 0..6");
  }
  verify->add_option("--q", va.q, "List of numeric q values");
  verify->add_option("--s", va.s, "List of complex s values");
  verify->add_option("--tol", verify_tol, "Numeric tolerance");
  verify->add_option("--config", va.config, "JSON grid description");
  long jobs_flag = 0;
  auto* jobs_opt = verify->add_option("--jobs", jobs_flag, "Worker threads (default: QEULER_JOBS or 1)");

  TableArgs ta;
  std::string table_tol;
  auto* table = app.add_subcommand("table", "Emit a table of values over parameter ranges");
  table->fallthrough();
  table->add_option("kind", ta.kind, "euler, ssum or zeta")
      ->required()
      ->check(CLI::IsMember({"euler", "ssum", "zeta"}));
  std::map<std::string, std::string> table_lists;
  for (const char* p : {"n", "i", "h", "r", "x", "c", "a", "s", "q"}) {
    table->add_option(std::string("--") + p, table_lists[p], "List or range");
  }
  table->add_option("--at", ta.at, "Evaluate exact values at this rational q");
  table->add_option("--tol", table_tol, "Numeric tolerance for zeta");

  std::vector<std::string> argv_store(args.begin(), args.end());
  if (argv_store.empty()) argv_store.emplace_back("qeuler");
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  const auto given = [](CLI::App* sub, const std::map<std::string, std::string>& lists) {
    std::map<std::string, std::string> out_lists;
    for (const auto& [k, v] : lists) {
      if (sub->count("--" + k) > 0) out_lists[k] = v;
    }
    return out_lists;
  };

  const Format fmt = parse_format(format);
  std::ostringstream buffer;
  int code = kExitPass;
  try {
    if (*euler) {
      write_single("euler", cmd_euler(ea), 1, fmt, buffer);
    } else if (*ssum) {
      write_single("ssum", cmd_ssum(sa), 1, fmt, buffer);
    } else if (*zeta) {
      write_single("zeta", cmd_zeta(za), 3, fmt, buffer);
    } else if (*verify) {
      va.lists = given(verify, verify_lists);
      if (verify->count("--tol") > 0) va.tol = parse_double(verify_tol);
      if (jobs_opt->count() > 0) va.jobs = jobs_flag;
      code = cmd_verify(va, fmt, buffer);
    } else if (*table) {
      ta.lists = given(table, table_lists);
      if (table->count("--tol") > 0) ta.tol = parse_double(table_tol);
      Table t = ta.kind == "euler" ? table_euler(ta) : ta.kind == "ssum" ? table_ssum(ta) : table_zeta(ta);
      write_table(ta.kind, t, fmt, buffer);
    }
  } catch (const ParityError& e) {
    err << "error: parity: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ConvergenceDomainError& e) {
    err << "error: convergence domain: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const PoleError& e) {
    err << "error: pole: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  if (output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(output);
    if (!file) {
      err << "error: cannot write '" << output << "'\n";
      return kExitInvalid;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace qeuler::cli
