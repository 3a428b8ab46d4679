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

#include "harary/closed_forms.hpp"

#include <cmath>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "harary/closeness.hpp"

namespace harary {
namespace {

double closeness_value(int k, int n) {
  return *closeness_formula(HararyParams(k, n)).value;
}

double residual_value(int k, int n) {
  return *residual_formula(HararyParams(k, n)).value;
}

TEST(TailSum, MatchesLiteralSum) {
  for (int h = 0; h <= 60; ++h) {
    double literal = 0.0;
    for (int i = 1; i <= h; ++i) literal += (i - 1) * std::ldexp(1.0, -i);
    EXPECT_DOUBLE_EQ(tail_sum(h), literal) << "h=" << h;
  }
  EXPECT_EQ(tail_sum(0), 0.0);
  EXPECT_EQ(tail_sum(1), 0.0);
  EXPECT_EQ(tail_sum(2), 0.25);
}

TEST(ResidueT, Examples) {
  EXPECT_EQ(residue_t(HararyParams(4, 9), ResidueRule::EvenK), (Residue{0, 4}));
  EXPECT_EQ(residue_t(HararyParams(5, 18), ResidueRule::OddKEvenN),
            (Residue{2, 4}));
  EXPECT_EQ(residue_t(HararyParams(5, 17), ResidueRule::OddKOddN),
            (Residue{3, 8}));
  EXPECT_EQ(residue_t(HararyParams(3, 15), ResidueRule::K3Odd),
            (Residue{3, 4}));
}

TEST(ResidueT, RuleMustMatchParities) {
  EXPECT_THROW(residue_t(HararyParams(4, 9), ResidueRule::OddKOddN),
               ParameterError);
  EXPECT_THROW(residue_t(HararyParams(5, 17), ResidueRule::K3Odd),
               ParameterError);
  EXPECT_THROW(residue_t(HararyParams(3, 10), ResidueRule::K3Odd),
               ParameterError);
}

TEST(ClosenessFormula, AnchorCells) {
  EXPECT_EQ(closeness_value(4, 9), 27.0);
  EXPECT_EQ(closeness_value(4, 11), 35.75);
  EXPECT_EQ(closeness_value(5, 12), 48.0);
  EXPECT_EQ(closeness_value(5, 18), 90.0);
  EXPECT_EQ(closeness_value(5, 24), 135.0);
  EXPECT_EQ(closeness_value(7, 22), 148.5);
  EXPECT_EQ(closeness_value(3, 10), 27.5);
  EXPECT_EQ(closeness_value(3, 12), 36.0);
  EXPECT_EQ(closeness_value(5, 17), 83.75);
  EXPECT_EQ(closeness_value(3, 15), 48.75);
}

TEST(ClosenessFormula, TraceRecordsBranch) {
  const auto even = closeness_formula(HararyParams(4, 9));
  EXPECT_EQ(even.trace.theorem_id, "Thm2.1-t0");
  EXPECT_EQ(even.trace.t, (Residue{0, 4}));
  EXPECT_EQ(even.trace.diam, 2);
  EXPECT_EQ(closeness_formula(HararyParams(4, 11)).trace.theorem_id,
            "Thm2.1-tnz");

  const auto odd = closeness_formula(HararyParams(5, 17));
  EXPECT_EQ(odd.trace.theorem_id, "Thm2.8");
  EXPECT_EQ(odd.trace.ring_vertices, 4);
  EXPECT_EQ(odd.trace.ring_weight, 0.5);
  EXPECT_EQ(odd.trace.t, (Residue{3, 8}));
}

TEST(ClosenessFormula, KTwoIsNotCovered) {
  const auto r = closeness_formula(HararyParams(2, 10));
  EXPECT_FALSE(r.covered());
  EXPECT_EQ(r.trace.theorem_id, "NotCovered-k2");
}

TEST(ResidualFormula, AnchorCells) {
  EXPECT_EQ(residual_value(4, 11), 29.0);
  EXPECT_EQ(residual_value(4, 9), 20.75);
  EXPECT_EQ(residual_value(4, 8), 16.5);
  EXPECT_EQ(residual_value(5, 18), 79.75);
  EXPECT_EQ(residual_value(3, 10), 21.625);
  EXPECT_EQ(residual_value(3, 12), 29.375);
  EXPECT_EQ(residual_value(5, 17), 72.5);
  EXPECT_EQ(residual_value(3, 15), 39.6875);
  EXPECT_EQ(residual_formula(HararyParams(3, 15)).trace.theorem_id,
            "Cor3.6-t3");
}

TEST(ResidualFormula, SmallOddCubicTable) {
  EXPECT_EQ(residual_value(3, 5), 5.0);
  EXPECT_EQ(residual_value(3, 7), 11.0);
  EXPECT_EQ(residual_value(3, 9), 17.5);
  EXPECT_EQ(residual_value(3, 11), 24.875);
  EXPECT_EQ(residual_formula(HararyParams(3, 11)).trace.theorem_id,
            "Rem3.7-table");
}

TEST(ResidualFormula, GapsAreNamed) {
  EXPECT_EQ(residual_formula(HararyParams(2, 9)).trace.theorem_id,
            "NotCovered-k2");
  EXPECT_EQ(residual_formula(HararyParams(5, 12)).trace.theorem_id,
            "NotCovered-oddK-evenN-diam<=2");
  EXPECT_EQ(residual_formula(HararyParams(5, 13)).trace.theorem_id,
            "NotCovered-oddK-oddN-diam<=2");
}

// The cubic odd-n gap (diameter <= 3 beyond the small table) is empty:
// n <= 11 is tabulated and n >= 13 already has diameter 4.
TEST(ResidualFormula, CubicGapIsUnreachable) {
  for (int n = 5; n <= 501; n += 2) {
    EXPECT_NE(residual_formula(HararyParams(3, n)).trace.theorem_id,
              "NotCovered-k3-oddN-diam<=3")
        << "n=" << n;
  }
  EXPECT_EQ(residual_formula(HararyParams(3, 13)).trace.theorem_id,
            "Cor3.6-t1");
}

TEST(VertexClasses, ClassifyAndValues) {
  const HararyParams p(5, 17);
  EXPECT_EQ(classify_vertex(p, 8), VertexClass::apex());
  EXPECT_EQ(classify_vertex(p, 6), VertexClass::ring(0));
  EXPECT_EQ(classify_vertex(p, 10), VertexClass::ring(0));
  EXPECT_EQ(classify_vertex(p, 11), VertexClass::remainder());
  EXPECT_EQ(vertex_closeness_formula_odd_odd(p, VertexClass::apex()), 5.25);
  EXPECT_EQ(vertex_closeness_formula_odd_odd(p, VertexClass::ring(0)), 5.0);
  EXPECT_EQ(vertex_closeness_formula_odd_odd(p, VertexClass::remainder()),
            4.875);
  EXPECT_EQ(to_string(VertexClass::ring(2)), "RingGroup(2)");
}

TEST(VertexClasses, DomainChecks) {
  EXPECT_THROW(classify_vertex(HararyParams(4, 17), 0), ParameterError);
  EXPECT_THROW(classify_vertex(HararyParams(5, 13), 0), ParameterError);
  EXPECT_THROW(classify_vertex(HararyParams(5, 17), 17), ParameterError);
  EXPECT_THROW(vertex_closeness_formula_odd_odd(HararyParams(5, 17),
                                                VertexClass::ring(1)),
               ParameterError);
}

// Apex + (k-1) * rings + |RM| * RM reproduces the graph total, and each
// class value matches BFS on every vertex of the class.
TEST(VertexClasses, ReconstructionAndPerVertexAgreement) {
  for (int k = 3; k <= 5; k += 2) {
    for (int n = k + 2; n <= 101; n += 2) {
      const HararyParams p(k, n);
      if (detail::harary_diameter(k, n).value <= 2) continue;
      SCOPED_TRACE("k=" + std::to_string(k) + " n=" + std::to_string(n));
      EXPECT_EQ(class_reconstruction(p), *closeness_formula(p).value);
      const Graph g = build_harary(p);
      for (Vertex v = 0; v < n; ++v) {
        EXPECT_EQ(vertex_closeness_formula_odd_odd(p, classify_vertex(p, v)),
                  vertex_closeness(g, v))
            << "v=" << v;
      }
    }
  }
}

TEST(CirculantFormula, EqualsEvenHarary) {
  for (int n = 3; n <= 256; ++n) {
    for (int l = 1; 2 * l < n; ++l) {
      const double c = *circulant_closeness_formula(n, l).value;
      if (l >= 2) {
        ASSERT_EQ(c, closeness_value(2 * l, n)) << "n=" << n << " l=" << l;
      }
      if (n <= 64) {
        ASSERT_EQ(c, graph_closeness(build_circulant(n, l)).total)
            << "n=" << n << " l=" << l;
      }
    }
  }
  EXPECT_EQ(*circulant_closeness_formula(7, 3).value, 21.0);
  EXPECT_THROW(circulant_closeness_formula(7, 4), ParameterError);
}

// Every valid cell lands in exactly one named branch and the set of
// branches reached over a modest grid is the full set.
TEST(Dispatch, TotalOverGrid) {
  std::set<std::string> closeness_ids, residual_ids;
  for (int k = 2; k <= 12; ++k) {
    for (int n = 5; n <= 200; ++n) {
      if (!HararyParams::valid(k, n)) continue;
      const HararyParams p(k, n);
      const auto c = closeness_formula(p);
      const auto r = residual_formula(p);
      ASSERT_FALSE(c.trace.theorem_id.empty());
      ASSERT_FALSE(r.trace.theorem_id.empty());
      EXPECT_EQ(c.covered(), k != 2);
      closeness_ids.insert(c.trace.theorem_id);
      residual_ids.insert(r.trace.theorem_id);
    }
  }
  for (const char* id :
       {"Thm2.1-t0", "Thm2.1-tnz", "Thm2.2-diam2", "Thm2.8", "Thm2.7-diam2",
        "NotCovered-k2"}) {
    EXPECT_TRUE(closeness_ids.contains(id)) << id;
  }
  for (const char* id :
       {"Thm3.1-n1", "Thm3.1-other", "Rem3.2-vanishing", "Rem3.2-diam2-n1",
        "Cor3.4-n4d", "Cor3.4-other", "Thm3.3-boundary", "Thm3.3-other",
        "Cor3.6-t1", "Cor3.6-t3", "Rem3.7-table", "Thm3.5"}) {
    EXPECT_TRUE(residual_ids.contains(id)) << id;
  }
}

// R = C - D_v with the recorded D_v, wherever the rule subtracts D_v from
// the unshrunk total.
TEST(Dispatch, RemovalDeltaIsConsistent) {
  for (int k = 3; k <= 11; k += 2) {
    for (int n = k + 2; n <= 151; n += 2) {
      const HararyParams p(k, n);
      const auto r = residual_formula(p);
      if (!r.covered() || !r.trace.removal_delta) continue;
      const double c = *closeness_formula(p).value;
      const double apex_c =
          k == 3 ? 0.0
                 : vertex_closeness_formula_odd_odd(p, VertexClass::apex());
      if (k == 3) {
        // The cubic rule folds the apex into D_v.
        EXPECT_NEAR(*r.value,
                    c - 2.0 * vertex_closeness(build_harary(p), p.apex()) -
                        *r.trace.removal_delta,
                    1e-9)
            << "n=" << n;
      } else {
        EXPECT_NEAR(*r.value, c - 2.0 * apex_c - *r.trace.removal_delta, 1e-9)
            << "k=" << k << " n=" << n;
      }
    }
  }
}

}  // namespace
}  // namespace harary
