// Copyright 2026 The harary-closeness Authors
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

#pragma once

#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "harary/formula_result.hpp"
#include "harary/verifier.hpp"

namespace harary {

using Json = nlohmann::ordered_json;

enum class ReportFormat { Csv, Json };

inline constexpr std::string_view kCsvHeader =
    "k,n,parity_case,theorem_id,quantity,diam_formula,diam_bfs,"
    "formula_value,oracle_value,abs_diff,status\n";

// 17 significant digits, enough to round-trip any double.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

template <typename T>
std::optional<T> parse_enum(std::string_view name, auto... candidates) {
  for (T c : {candidates...}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

inline ParityCase parity_from(std::string_view s) {
  if (auto p = parse_enum<ParityCase>(s, ParityCase::EvenK,
                                      ParityCase::OddKEvenN,
                                      ParityCase::OddKOddN)) {
    return *p;
  }
  throw ParameterError("unknown parity case '" + std::string(s) + "'");
}

inline RowStatus status_from(std::string_view s) {
  if (auto p = parse_enum<RowStatus>(s, RowStatus::Ok, RowStatus::Mismatch,
                                     RowStatus::NotCovered)) {
    return *p;
  }
  throw ParameterError("unknown row status '" + std::string(s) + "'");
}

inline Quantity quantity_from(std::string_view s) {
  if (auto q = parse_quantity(s)) return *q;
  throw ParameterError("unknown quantity '" + std::string(s) + "'");
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace detail

inline Json trace_to_json(const FormulaTrace& t) {
  Json j;
  j["theorem_id"] = t.theorem_id;
  if (t.t) {
    j["t"] = t.t->value;
    j["t_modulus"] = t.t->modulus;
  }
  if (t.diam) j["diam"] = *t.diam;
  if (t.inner_diam) j["inner_diam"] = *t.inner_diam;
  if (t.ring_vertices) j["A"] = *t.ring_vertices;
  if (t.ring_weight) j["B"] = *t.ring_weight;
  if (t.removal_delta) j["D_v"] = *t.removal_delta;
  return j;
}

inline FormulaTrace trace_from_json(const Json& j) {
  FormulaTrace t;
  t.theorem_id = j.at("theorem_id").get<std::string>();
  if (j.contains("t")) {
    t.t = Residue{j.at("t").get<int>(), j.at("t_modulus").get<int>()};
  }
  t.diam = detail::optional_from<int>(j, "diam");
  t.inner_diam = detail::optional_from<int>(j, "inner_diam");
  t.ring_vertices = detail::optional_from<int>(j, "A");
  t.ring_weight = detail::optional_from<double>(j, "B");
  t.removal_delta = detail::optional_from<double>(j, "D_v");
  return t;
}

inline Json row_to_json(const ComparisonRow& r) {
  Json j;
  j["k"] = r.k;
  j["n"] = r.n;
  j["parity_case"] = to_string(r.parity_case);
  j["theorem_id"] = r.theorem_id;
  j["quantity"] = to_string(r.quantity);
  j["diam_formula"] = detail::optional_json(r.diam_formula);
  j["diam_bfs"] = r.diam_bfs;
  j["formula_value"] = detail::optional_json(r.formula_value);
  j["oracle_value"] = r.oracle_value;
  j["abs_diff"] = detail::optional_json(r.abs_diff);
  j["status"] = to_string(r.status);
  j["trace"] = trace_to_json(r.trace);
  return j;
}

inline ComparisonRow row_from_json(const Json& j) {
  ComparisonRow r;
  r.k = j.at("k").get<int>();
  r.n = j.at("n").get<int>();
  r.parity_case = detail::parity_from(j.at("parity_case").get<std::string>());
  r.theorem_id = j.at("theorem_id").get<std::string>();
  r.quantity = detail::quantity_from(j.at("quantity").get<std::string>());
  r.diam_formula = detail::optional_from<int>(j, "diam_formula");
  r.diam_bfs = j.at("diam_bfs").get<int>();
  r.formula_value = detail::optional_from<double>(j, "formula_value");
  r.oracle_value = j.at("oracle_value").get<double>();
  r.abs_diff = detail::optional_from<double>(j, "abs_diff");
  r.status = detail::status_from(j.at("status").get<std::string>());
  r.trace = trace_from_json(j.at("trace"));
  return r;
}

// The worker count is deliberately left out so reports compare equal
// across runs with different parallelism.
inline Json report_to_json(const SweepReport& report) {
  Json j;
  const auto& c = report.config;
  j["config"]["k_range"] = {c.k_range.lo, c.k_range.hi};
  j["config"]["n_range"] = {c.n_range.lo, c.n_range.hi};
  j["config"]["tolerance"] = c.tolerance;
  j["config"]["quantities"] = Json::array();
  for (Quantity q : c.quantities) {
    j["config"]["quantities"].push_back(to_string(q));
  }
  j["summary"]["cells"] = report.summary.cells;
  j["summary"]["ok"] = report.summary.ok;
  j["summary"]["mismatch"] = report.summary.mismatch;
  j["summary"]["not_covered"] = report.summary.not_covered;
  j["rows"] = Json::array();
  for (const auto& r : report.rows) j["rows"].push_back(row_to_json(r));
  return j;
}

// Inverse of report_to_json; jobs and allow_large come back as defaults.
inline SweepReport report_from_json(const Json& j) {
  SweepReport report;
  const auto& c = j.at("config");
  report.config.k_range = {c.at("k_range").at(0).get<int>(),
                           c.at("k_range").at(1).get<int>()};
  report.config.n_range = {c.at("n_range").at(0).get<int>(),
                           c.at("n_range").at(1).get<int>()};
  report.config.tolerance = c.at("tolerance").get<double>();
  report.config.quantities.clear();
  for (const auto& q : c.at("quantities")) {
    report.config.quantities.push_back(
        detail::quantity_from(q.get<std::string>()));
  }
  const auto& s = j.at("summary");
  report.summary = {s.at("cells").get<long long>(), s.at("ok").get<long long>(),
                    s.at("mismatch").get<long long>(),
                    s.at("not_covered").get<long long>()};
  for (const auto& r : j.at("rows")) report.rows.push_back(row_from_json(r));
  return report;
}

inline std::string emit_csv(const std::vector<ComparisonRow>& rows) {
  std::string out(kCsvHeader);
  for (const auto& r : rows) {
    out += std::to_string(r.k);
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    out += to_string(r.parity_case);
    out += ',';
    out += r.theorem_id;
    out += ',';
    out += to_string(r.quantity);
    out += ',';
    if (r.diam_formula) out += std::to_string(*r.diam_formula);
    out += ',';
    out += std::to_string(r.diam_bfs);
    out += ',';
    if (r.formula_value) out += format_double(*r.formula_value);
    out += ',';
    out += format_double(r.oracle_value);
    out += ',';
    if (r.abs_diff) out += format_double(*r.abs_diff);
    out += ',';
    out += to_string(r.status);
    out += '\n';
  }
  return out;
}

inline std::string emit_report(const SweepReport& report,
                               ReportFormat format) {
  if (format == ReportFormat::Csv) return emit_csv(report.rows);
  return report_to_json(report).dump(2) + "\n";
}

}  // namespace harary
