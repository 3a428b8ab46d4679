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

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "harary/harary.hpp"

namespace harary::cli {

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2 };

enum class Method { Formula, Oracle, Both };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::Formula:
      return "formula";
    case Method::Oracle:
      return "oracle";
    case Method::Both:
      return "both";
  }
  return "?";
}

// Result of a closeness / residual / diameter query on one graph.
struct MetricResult {
  std::string quantity;
  int n = 0;
  std::optional<int> k;  // Harary graph
  std::optional<int> l;  // consecutive circulant
  std::optional<std::string> parity_case;
  Method method = Method::Both;
  std::optional<FormulaResult> formula;
  std::optional<double> oracle_value;
  std::optional<std::vector<Vertex>> argmin;

  std::optional<double> abs_diff() const {
    if (formula && formula->value && oracle_value) {
      return std::abs(*formula->value - *oracle_value);
    }
    return std::nullopt;
  }

  friend bool operator==(const MetricResult&, const MetricResult&) = default;
};

inline std::string shortest(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

inline Json metric_to_json(const MetricResult& m) {
  Json j;
  j["quantity"] = m.quantity;
  if (m.k) j["k"] = *m.k;
  j["n"] = m.n;
  if (m.l) j["l"] = *m.l;
  if (m.parity_case) j["parity_case"] = *m.parity_case;
  j["method"] = to_string(m.method);
  if (m.formula) {
    j["coverage"] = harary::to_string(m.formula->coverage());
    j["formula_value"] = detail::optional_json(m.formula->value);
  }
  if (m.oracle_value) j["oracle_value"] = *m.oracle_value;
  if (auto d = m.abs_diff()) j["abs_diff"] = *d;
  if (m.formula) {
    const Json trace = trace_to_json(m.formula->trace);
    for (const auto& [key, value] : trace.items()) j[key] = value;
  }
  if (m.argmin) j["argmin"] = *m.argmin;
  return j;
}

inline MetricResult metric_from_json(const Json& j) {
  MetricResult m;
  m.quantity = j.at("quantity").get<std::string>();
  m.k = detail::optional_from<int>(j, "k");
  m.n = j.at("n").get<int>();
  m.l = detail::optional_from<int>(j, "l");
  m.parity_case = detail::optional_from<std::string>(j, "parity_case");
  const auto method = j.at("method").get<std::string>();
  for (Method c : {Method::Formula, Method::Oracle, Method::Both}) {
    if (to_string(c) == method) m.method = c;
  }
  if (j.contains("coverage")) {
    m.formula = FormulaResult{detail::optional_from<double>(j, "formula_value"),
                              trace_from_json(j)};
  }
  m.oracle_value = detail::optional_from<double>(j, "oracle_value");
  m.argmin = detail::optional_from<std::vector<Vertex>>(j, "argmin");
  return m;
}

namespace detail {

inline IntRange parse_range(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  IntRange r;
  auto parse_int = [&](std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
  };
  const std::string_view sv(text);
  if (colon == std::string::npos) {
    if (!parse_int(sv, r.lo)) {
      throw ParameterError(std::string(flag) + " expects lo:hi");
    }
    r.hi = r.lo;
  } else if (!parse_int(sv.substr(0, colon), r.lo) ||
             !parse_int(sv.substr(colon + 1), r.hi)) {
    throw ParameterError(std::string(flag) + " expects lo:hi");
  }
  if (r.empty()) throw ParameterError(std::string(flag) + " is empty");
  return r;
}

inline std::vector<Quantity> parse_quantities(
    const std::vector<std::string>& names) {
  std::vector<Quantity> out;
  for (const auto& name : names) {
    auto q = parse_quantity(name);
    if (!q) throw ParameterError("unknown quantity '" + name + "'");
    if (std::find(out.begin(), out.end(), *q) == out.end()) out.push_back(*q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline void emit(const std::string& text, const std::string& out_path,
                 std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw ParameterError("cannot open '" + out_path + "'");
  file << text;
}

struct GraphChoice {
  std::optional<int> k;
  std::optional<int> l;
  int n = 0;
};

inline GraphChoice graph_choice(const CLI::Option* k_opt,
                                const CLI::Option* l_opt, int k, int n,
                                int l) {
  if (k_opt->count() > 0 && l_opt->count() > 0) {
    throw ParameterError("--k and --l are mutually exclusive");
  }
  if (k_opt->count() == 0 && l_opt->count() == 0) {
    throw ParameterError("one of --k (Harary) or --l (circulant) is required");
  }
  GraphChoice c;
  c.n = n;
  if (k_opt->count() > 0) {
    HararyParams{k, n};  // validates
    c.k = k;
  } else {
    if (l < 1 || l > n / 2) {
      throw ParameterError("--l must lie in [1, n/2]");
    }
    c.l = l;
  }
  return c;
}

inline Graph graph_for(const GraphChoice& c) {
  if (c.k) return build_harary(HararyParams(*c.k, c.n));
  return build_circulant(c.n, *c.l);
}

inline MetricResult compute_metric(const std::string& quantity,
                                   const GraphChoice& choice, Method method,
                                   unsigned jobs) {
  MetricResult m;
  m.quantity = quantity;
  m.n = choice.n;
  m.k = choice.k;
  m.l = choice.l;
  m.method = method;
  std::optional<HararyParams> params;
  if (choice.k) {
    params.emplace(*choice.k, choice.n);
    m.parity_case = std::string(harary::to_string(params->parity_case()));
  }

  if (method != Method::Oracle) {
    if (quantity == "closeness") {
      m.formula = params ? closeness_formula(*params)
                         : circulant_closeness_formula(choice.n, *choice.l);
    } else if (quantity == "residual") {
      m.formula = params ? residual_formula(*params)
                         : FormulaResult::not_covered("NotCovered-circulant");
    } else if (params) {
      m.formula = diameter_formula(*params);
    } else {
      // Circulant diameter alongside its closeness rule.
      const auto trace = circulant_closeness_formula(choice.n, *choice.l).trace;
      m.formula = FormulaResult::covered_by(
          *trace.diam, FormulaTrace{.theorem_id = "Cor2.10-diam",
                                    .t = trace.t,
                                    .diam = trace.diam});
    }
  }
  if (method != Method::Formula) {
    const Graph g = graph_for(choice);
    if (quantity == "closeness") {
      m.oracle_value = graph_closeness(g, jobs).total;
    } else if (quantity == "residual") {
      auto report = residual_closeness(g, jobs);
      m.oracle_value = report.r_value;
      m.argmin = std::move(report.argmin);
    } else {
      m.oracle_value = graph_stats(g, jobs).diameter;
    }
  }
  return m;
}

inline std::string render_metric(const MetricResult& m,
                                 const std::string& format) {
  if (format == "json") return metric_to_json(m).dump() + "\n";
  const auto formula_text = [&]() -> std::string {
    if (!m.formula) return "";
    return m.formula->value ? shortest(*m.formula->value) : "";
  };
  if (format == "csv") {
    std::string out =
        "quantity,k,n,l,method,theorem_id,formula_value,oracle_value,"
        "abs_diff,coverage\n";
    out += m.quantity + ",";
    out += (m.k ? std::to_string(*m.k) : "") + ",";
    out += std::to_string(m.n) + ",";
    out += (m.l ? std::to_string(*m.l) : "") + ",";
    out += std::string(to_string(m.method)) + ",";
    out += (m.formula ? m.formula->trace.theorem_id : "") + ",";
    out += (m.formula && m.formula->value ? format_double(*m.formula->value)
                                          : "") +
           ",";
    out += (m.oracle_value ? format_double(*m.oracle_value) : "") + ",";
    out += (m.abs_diff() ? format_double(*m.abs_diff()) : "") + ",";
    out += m.formula ? std::string(harary::to_string(m.formula->coverage()))
                     : "";
    out += "\n";
    return out;
  }
  // table: a bare value for single-method queries.
  if (m.method == Method::Oracle) return shortest(*m.oracle_value) + "\n";
  if (m.method == Method::Formula) {
    if (!m.formula->value) return m.formula->trace.theorem_id + "\n";
    return formula_text() + "\n";
  }
  std::ostringstream out;
  out << "formula    "
      << (m.formula->value ? formula_text() : m.formula->trace.theorem_id)
      << "\n";
  out << "oracle     " << shortest(*m.oracle_value) << "\n";
  if (auto d = m.abs_diff()) out << "abs_diff   " << shortest(*d) << "\n";
  out << "theorem    " << m.formula->trace.theorem_id << "\n";
  if (m.formula->trace.t) {
    out << "t          " << m.formula->trace.t->value << " (mod "
        << m.formula->trace.t->modulus << ")\n";
  }
  if (m.formula->trace.diam) {
    out << "diam       " << *m.formula->trace.diam << "\n";
  }
  if (m.argmin) {
    out << "argmin    ";
    for (Vertex v : *m.argmin) out << ' ' << v;
    out << "\n";
  }
  return out.str();
}

}  // namespace detail

// Runs one invocation. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Closeness and vertex residual closeness of Harary graphs",
               "harary"};
  app.require_subcommand(1, 1);

  int k = 0;
  int n = 0;
  int l = 0;
  std::string method_name = "both";
  std::string format;
  std::string out_path;
  unsigned jobs = 1;
  std::string k_range_text = "2:12";
  std::string n_range_text = "5:64";
  std::vector<std::string> quantity_names;
  double tolerance = 1e-9;
  bool allow_large = false;

  struct GraphOpts {
    CLI::Option* k;
    CLI::Option* l;
  };
  auto add_graph_flags = [&](CLI::App* sub) {
    GraphOpts o;
    o.k = sub->add_option("--k", k, "Harary connectivity k");
    sub->add_option("--n", n, "vertex count")->required();
    o.l = sub->add_option("--l", l, "circulant step bound l");
    sub->add_option("--out", out_path, "write output to a file");
    sub->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    return o;
  };

  auto* gen = app.add_subcommand("gen", "emit a Harary or circulant graph");
  const auto gen_opts = add_graph_flags(gen);
  gen->add_option("--format", format)
      ->check(CLI::IsMember({"edgelist", "dot", "json"}));

  std::vector<std::pair<CLI::App*, GraphOpts>> metric_cmds;
  for (const char* name : {"closeness", "residual", "diameter"}) {
    auto* sub = app.add_subcommand(name, std::string("compute ") + name);
    const auto opts = add_graph_flags(sub);
    sub->add_option("--method", method_name)
        ->check(CLI::IsMember({"formula", "oracle", "both"}));
    sub->add_option("--format", format)
        ->check(CLI::IsMember({"table", "csv", "json"}));
    metric_cmds.emplace_back(sub, opts);
  }

  auto add_verifier_flags = [&](CLI::App* sub) {
    sub->add_option("--quantities", quantity_names,
                    "diameter, closeness, residual, vertex_classes")
        ->delimiter(',');
    sub->add_option("--tolerance", tolerance, "absolute tolerance");
    sub->add_option("--format", format)
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "write output to a file");
    sub->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  };
  auto* sweep_cmd = app.add_subcommand("sweep", "differential sweep over a grid");
  sweep_cmd->add_option("--k-range", k_range_text, "inclusive lo:hi");
  sweep_cmd->add_option("--n-range", n_range_text, "inclusive lo:hi");
  sweep_cmd->add_flag("--allow-large", allow_large,
                      "permit grids above 1000000 cells");
  add_verifier_flags(sweep_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "check a single (k, n) cell");
  verify_cmd->add_option("--k", k)->required();
  verify_cmd->add_option("--n", n)->required();
  add_verifier_flags(verify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "harary: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      const auto choice =
          detail::graph_choice(gen_opts.k, gen_opts.l, k, n, l);
      const auto fmt = parse_graph_format(format.empty() ? "edgelist" : format);
      detail::emit(export_graph(detail::graph_for(choice), *fmt), out_path,
                   out);
      return kOk;
    }
    for (const auto& [sub, opts] : metric_cmds) {
      if (!sub->parsed()) continue;
      const auto choice = detail::graph_choice(opts.k, opts.l, k, n, l);
      const Method method = method_name == "formula"  ? Method::Formula
                            : method_name == "oracle" ? Method::Oracle
                                                      : Method::Both;
      const auto metric =
          detail::compute_metric(sub->get_name(), choice, method, jobs);
      detail::emit(
          detail::render_metric(metric, format.empty() ? "table" : format),
          out_path, out);
      return kOk;
    }

    SweepConfig cfg;
    cfg.tolerance = tolerance;
    cfg.jobs = jobs;
    cfg.allow_large = allow_large;
    if (!quantity_names.empty()) {
      cfg.quantities = detail::parse_quantities(quantity_names);
    }
    SweepReport report;
    if (sweep_cmd->parsed()) {
      cfg.k_range = detail::parse_range(k_range_text, "--k-range");
      cfg.n_range = detail::parse_range(n_range_text, "--n-range");
      report = sweep(cfg);
    } else {
      const HararyParams params(k, n);
      cfg.k_range = {k, k};
      cfg.n_range = {n, n};
      cfg.validate();
      const Graph g = build_harary(params);
      report.config = cfg;
      report.rows = compare_cell(params, run_oracle(g, cfg, jobs), cfg);
      report.summary = summarize(report.rows, 1);
    }
    const auto fmt = format == "json" ? ReportFormat::Json : ReportFormat::Csv;
    detail::emit(emit_report(report, fmt), out_path, out);
    return report.summary.mismatch > 0 ? kMismatch : kOk;
  } catch (const ParameterError& e) {
    err << "harary: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace harary::cli
