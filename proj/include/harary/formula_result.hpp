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

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace harary {

enum class Coverage { Covered, NotCoveredByPaper };

inline std::string_view to_string(Coverage c) {
  return c == Coverage::Covered ? "Covered" : "NotCovered";
}

// A residue together with the modulus it was taken in.
struct Residue {
  int value = 0;
  int modulus = 1;
  friend bool operator==(const Residue&, const Residue&) = default;
};

// Which closed-form case fired and the intermediates it consumed. Fields a
// branch did not read stay empty.
struct FormulaTrace {
  std::string theorem_id;
  std::optional<Residue> t;
  std::optional<int> diam;
  std::optional<int> inner_diam;     // diam(H_{k-1,n}), odd k only
  std::optional<int> ring_vertices;  // A = (diam-2)(k-1)
  std::optional<double> ring_weight; // B = 1 - 2^-(diam-2)
  std::optional<double> removal_delta;  // D_v
  friend bool operator==(const FormulaTrace&, const FormulaTrace&) = default;
};

struct FormulaResult {
  std::optional<double> value;  // empty <=> not covered
  FormulaTrace trace;

  Coverage coverage() const {
    return value ? Coverage::Covered : Coverage::NotCoveredByPaper;
  }
  bool covered() const { return value.has_value(); }

  static FormulaResult covered_by(double v, FormulaTrace trace) {
    return {v, std::move(trace)};
  }
  static FormulaResult not_covered(std::string gap) {
    return {std::nullopt, FormulaTrace{.theorem_id = std::move(gap)}};
  }

  friend bool operator==(const FormulaResult&, const FormulaResult&) = default;
};

}  // namespace harary
