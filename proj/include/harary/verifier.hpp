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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "harary/closed_forms.hpp"
#include "harary/closeness.hpp"
#include "harary/distance.hpp"
#include "harary/error.hpp"
#include "harary/graph.hpp"
#include "harary/parallel.hpp"

namespace harary {

enum class Quantity { Diameter, Closeness, Residual, VertexClasses };

inline constexpr Quantity kAllQuantities[] = {
    Quantity::Diameter, Quantity::Closeness, Quantity::Residual,
    Quantity::VertexClasses};

inline std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::Diameter:
      return "diameter";
    case Quantity::Closeness:
      return "closeness";
    case Quantity::Residual:
      return "residual";
    case Quantity::VertexClasses:
      return "vertex_classes";
  }
  return "?";
}

inline std::optional<Quantity> parse_quantity(std::string_view name) {
  for (Quantity q : kAllQuantities) {
    if (to_string(q) == name) return q;
  }
  return std::nullopt;
}

enum class RowStatus { Ok, Mismatch, NotCovered };

inline std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Ok:
      return "Ok";
    case RowStatus::Mismatch:
      return "Mismatch";
    case RowStatus::NotCovered:
      return "NotCovered";
  }
  return "?";
}

// Inclusive integer interval.
struct IntRange {
  int lo = 0;
  int hi = -1;

  bool empty() const { return hi < lo; }
  long long size() const { return empty() ? 0 : 1LL * hi - lo + 1; }
  bool contains(int v) const { return v >= lo && v <= hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

inline constexpr long long kMaxCellsWithoutOverride = 1'000'000;

struct SweepConfig {
  IntRange k_range{2, 12};
  IntRange n_range{5, 64};
  double tolerance = 1e-9;
  std::vector<Quantity> quantities{std::begin(kAllQuantities),
                                   std::end(kAllQuantities)};
  unsigned jobs = 1;
  bool allow_large = false;

  bool wants(Quantity q) const {
    return std::find(quantities.begin(), quantities.end(), q) !=
           quantities.end();
  }

  void validate() const {
    if (k_range.empty()) throw ParameterError("k range is empty");
    if (n_range.empty()) throw ParameterError("n range is empty");
    if (!(tolerance > 0.0)) throw ParameterError("tolerance must be > 0");
    if (quantities.empty()) throw ParameterError("no quantities requested");
    if (!allow_large &&
        k_range.size() * n_range.size() > kMaxCellsWithoutOverride) {
      throw ParameterError(
          "sweep grid exceeds 1000000 cells; pass the override to run it");
    }
  }

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

// One comparison of a closed form against the oracle for one (k, n).
// formula_value and abs_diff are empty on NotCovered rows.
struct ComparisonRow {
  int k = 0;
  int n = 0;
  ParityCase parity_case = ParityCase::EvenK;
  std::string theorem_id;
  Quantity quantity = Quantity::Closeness;
  std::optional<int> diam_formula;
  int diam_bfs = 0;
  std::optional<double> formula_value;
  double oracle_value = 0.0;
  std::optional<double> abs_diff;
  RowStatus status = RowStatus::Ok;
  FormulaTrace trace;

  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

// A row whose status is Mismatch or NotCovered.
using DiscrepancyRecord = ComparisonRow;

// The closed forms under test. Swappable so the harness can check itself
// against deliberately broken formulas.
struct FormulaSet {
  std::function<FormulaResult(const HararyParams&)> diameter =
      diameter_formula;
  std::function<FormulaResult(const HararyParams&)> closeness =
      closeness_formula;
  std::function<FormulaResult(const HararyParams&)> residual =
      residual_formula;
  std::function<double(const HararyParams&, const VertexClass&)>
      vertex_class = vertex_closeness_formula_odd_odd;
};

// Everything the oracle knows about one cell.
struct CellOracle {
  GraphStats stats;
  std::optional<ClosenessReport> closeness;
  std::optional<ResidualReport> residual;
};

inline CellOracle run_oracle(const Graph& g, const SweepConfig& cfg,
                             unsigned jobs = 1) {
  CellOracle oracle;
  oracle.stats = graph_stats(g, jobs);
  if (cfg.wants(Quantity::Closeness) || cfg.wants(Quantity::VertexClasses)) {
    oracle.closeness = graph_closeness(g, jobs);
  }
  if (cfg.wants(Quantity::Residual)) {
    oracle.residual = residual_closeness(g, jobs);
  }
  return oracle;
}

namespace detail {

inline ComparisonRow make_row(const HararyParams& params, Quantity quantity,
                              const FormulaResult& formula, double oracle,
                              std::optional<int> diam_formula, int diam_bfs,
                              double tolerance) {
  ComparisonRow row;
  row.k = params.k();
  row.n = params.n();
  row.parity_case = params.parity_case();
  row.theorem_id = formula.trace.theorem_id;
  row.quantity = quantity;
  row.diam_formula = diam_formula;
  row.diam_bfs = diam_bfs;
  row.oracle_value = oracle;
  row.trace = formula.trace;
  if (!formula.covered()) {
    row.status = RowStatus::NotCovered;
    return row;
  }
  row.formula_value = formula.value;
  row.abs_diff = std::abs(*formula.value - oracle);
  // NaN differences count as mismatches.
  row.status = *row.abs_diff <= tolerance ? RowStatus::Ok
                                          : RowStatus::Mismatch;
  return row;
}

// Worst per-vertex disagreement between the class formulas and the oracle,
// or nothing when the cell has no class structure.
inline std::optional<ComparisonRow> compare_vertex_classes(
    const HararyParams& params, const ClosenessReport& oracle,
    std::optional<int> diam_formula, int diam_bfs, const SweepConfig& cfg,
    const FormulaSet& formulas) {
  if (params.parity_case() != ParityCase::OddKOddN || !diam_formula ||
      *diam_formula <= 2 ||
      (params.k() - 1) * (*diam_formula - 2) + 1 > params.n()) {
    return std::nullopt;
  }
  Vertex worst = 0;
  double worst_diff = -1.0;
  double worst_formula = 0.0;
  for (Vertex v = 0; v < params.n(); ++v) {
    const double f = formulas.vertex_class(params, classify_vertex(params, v));
    const double diff = std::abs(f - oracle.per_vertex[v]);
    if (diff > worst_diff || std::isnan(diff)) {
      worst = v;
      worst_diff = diff;
      worst_formula = f;
      if (std::isnan(diff)) break;
    }
  }
  FormulaTrace trace{.theorem_id = "Thm2.8-classes",
                     .t = residue_t(params, ResidueRule::OddKOddN),
                     .diam = diam_formula};
  return make_row(params, Quantity::VertexClasses,
                  FormulaResult::covered_by(worst_formula, trace),
                  oracle.per_vertex[worst], diam_formula, diam_bfs,
                  cfg.tolerance);
}

}  // namespace detail

// Rows for every requested quantity of one cell, in Quantity order.
inline std::vector<ComparisonRow> compare_cell(
    const HararyParams& params, const CellOracle& oracle,
    const SweepConfig& cfg, const FormulaSet& formulas = {}) {
  std::vector<ComparisonRow> rows;
  const FormulaResult diam = formulas.diameter(params);
  std::optional<int> diam_formula;
  if (diam.covered()) diam_formula = static_cast<int>(*diam.value);
  const int diam_bfs = oracle.stats.diameter;

  if (cfg.wants(Quantity::Diameter)) {
    rows.push_back(detail::make_row(params, Quantity::Diameter, diam,
                                    diam_bfs, diam_formula, diam_bfs,
                                    cfg.tolerance));
  }
  if (cfg.wants(Quantity::Closeness)) {
    rows.push_back(detail::make_row(
        params, Quantity::Closeness, formulas.closeness(params),
        oracle.closeness->total, diam_formula, diam_bfs, cfg.tolerance));
  }
  if (cfg.wants(Quantity::Residual)) {
    rows.push_back(detail::make_row(
        params, Quantity::Residual, formulas.residual(params),
        oracle.residual->r_value, diam_formula, diam_bfs, cfg.tolerance));
  }
  if (cfg.wants(Quantity::VertexClasses)) {
    if (auto row = detail::compare_vertex_classes(
            params, *oracle.closeness, diam_formula, diam_bfs, cfg,
            formulas)) {
      rows.push_back(std::move(*row));
    }
  }
  return rows;
}

// Builds the graph once, runs the oracle once and returns the rows that did
// not agree (Mismatch) or had no formula (NotCovered).
inline std::vector<DiscrepancyRecord> verify_cell(
    const HararyParams& params, const SweepConfig& cfg,
    const FormulaSet& formulas = {}) {
  const Graph g = build_harary(params);
  const CellOracle oracle = run_oracle(g, cfg, cfg.jobs);
  auto rows = compare_cell(params, oracle, cfg, formulas);
  std::erase_if(rows,
                [](const ComparisonRow& r) { return r.status == RowStatus::Ok; });
  return rows;
}

struct SweepSummary {
  long long cells = 0;
  long long ok = 0;
  long long mismatch = 0;
  long long not_covered = 0;
  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

struct SweepReport {
  SweepConfig config;
  std::vector<ComparisonRow> rows;
  SweepSummary summary;

  std::vector<DiscrepancyRecord> discrepancies() const {
    std::vector<DiscrepancyRecord> out;
    for (const auto& r : rows) {
      if (r.status != RowStatus::Ok) out.push_back(r);
    }
    return out;
  }

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

inline SweepSummary summarize(const std::vector<ComparisonRow>& rows,
                              long long cells) {
  SweepSummary s;
  s.cells = cells;
  for (const auto& r : rows) {
    switch (r.status) {
      case RowStatus::Ok:
        ++s.ok;
        break;
      case RowStatus::Mismatch:
        ++s.mismatch;
        break;
      case RowStatus::NotCovered:
        ++s.not_covered;
        break;
    }
  }
  return s;
}

// Valid (k, n) pairs of the grid in (k, n) order; k >= n is skipped.
inline std::vector<HararyParams> sweep_cells(const SweepConfig& cfg) {
  std::vector<HararyParams> cells;
  for (int k = std::max(2, cfg.k_range.lo); k <= cfg.k_range.hi; ++k) {
    for (int n = cfg.n_range.lo; n <= cfg.n_range.hi; ++n) {
      if (HararyParams::valid(k, n)) cells.emplace_back(k, n);
    }
  }
  return cells;
}

// Cells run in parallel; rows are merged back in (k, n) order so the report
// does not depend on the worker count.
inline SweepReport sweep(const SweepConfig& cfg,
                         const FormulaSet& formulas = {}) {
  cfg.validate();
  const auto cells = sweep_cells(cfg);
  std::vector<std::vector<ComparisonRow>> per_cell(cells.size());
  parallel_for(cells.size(), cfg.jobs, [&](std::size_t i) {
    const Graph g = build_harary(cells[i]);
    per_cell[i] = compare_cell(cells[i], run_oracle(g, cfg), cfg, formulas);
  });
  SweepReport report;
  report.config = cfg;
  for (auto& rows : per_cell) {
    std::move(rows.begin(), rows.end(), std::back_inserter(report.rows));
  }
  report.summary =
      summarize(report.rows, static_cast<long long>(cells.size()));
  return report;
}

}  // namespace harary
