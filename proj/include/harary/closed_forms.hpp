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

#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>

#include "harary/distance.hpp"
#include "harary/error.hpp"
#include "harary/formula_result.hpp"
#include "harary/graph.hpp"

namespace harary {

namespace detail {

inline double half_pow(int e) { return std::ldexp(1.0, -e); }

}  // namespace detail

// sum_{i=2}^{h} (i-1)/2^i = 1 - (h+1) 2^-h; the empty sum for h < 2.
inline double tail_sum(int h) {
  if (h < 2) return 0.0;
  return 1.0 - (h + 1) * detail::half_pow(h);
}

enum class ResidueRule { EvenK, OddKEvenN, OddKOddN, K3Odd };

// EvenK: (n-1) mod k. OddKEvenN: n mod (k-1). OddKOddN: (n-k-1) mod 2(k-1).
// K3Odd: (n-4) mod 4.
inline Residue residue_t(const HararyParams& params, ResidueRule rule) {
  const int k = params.k();
  const int n = params.n();
  const ParityCase pc = params.parity_case();
  switch (rule) {
    case ResidueRule::EvenK:
      if (pc == ParityCase::EvenK) return {(n - 1) % k, k};
      break;
    case ResidueRule::OddKEvenN:
      if (pc == ParityCase::OddKEvenN) return {n % (k - 1), k - 1};
      break;
    case ResidueRule::OddKOddN:
      if (pc == ParityCase::OddKOddN) {
        return {(n - k - 1) % (2 * (k - 1)), 2 * (k - 1)};
      }
      break;
    case ResidueRule::K3Odd:
      if (k == 3 && n % 2 == 1) return {(n - 4) % 4, 4};
      break;
  }
  throw ParameterError("residue rule does not match the parities of k=" +
                       std::to_string(k) + ", n=" + std::to_string(n));
}

namespace detail {

inline FormulaResult closeness_even_k(int k, int n, int diam) {
  const Residue t = residue_t(HararyParams(k, n), ResidueRule::EvenK);
  FormulaTrace trace{.t = t, .diam = diam};
  const double p = half_pow(diam);
  if (t.value != 0) {
    trace.theorem_id = "Thm2.1-tnz";
    return FormulaResult::covered_by(n * (k + p * (t.value - 2 * k)),
                                     std::move(trace));
  }
  trace.theorem_id = "Thm2.1-t0";
  return FormulaResult::covered_by(n * (k - p * k), std::move(trace));
}

inline FormulaResult closeness_odd_k_even_n(int k, int n, int diam) {
  FormulaTrace trace{.diam = diam};
  if (diam == 1) {
    trace.theorem_id = "Thm2.2-diam1";
    return FormulaResult::covered_by(n * (n - 1) / 2.0, std::move(trace));
  }
  if (diam == 2) {
    trace.theorem_id = "Thm2.2-diam2";
    return FormulaResult::covered_by(n * (k / 2.0 + (n - k - 1) / 4.0),
                                     std::move(trace));
  }

  const int inner = harary_diameter(k - 1, n).value;
  trace.inner_diam = inner;
  const bool inner_odd = inner % 2 == 1;
  const char* parity = inner_odd ? "-odd-inner-diam" : "-even-inner-diam";
  const double p = half_pow(diam);

  if (k == 3) {
    trace.theorem_id = std::string("Cor2.6") + parity;
    const double value = inner_odd ? 3.5 * n - 6.0 * n * p
                                   : 3.5 * n - 2.0 * n * half_pow(diam - 1);
    return FormulaResult::covered_by(value, std::move(trace));
  }

  const Residue t = residue_t(HararyParams(k, n), ResidueRule::OddKEvenN);
  trace.t = t;
  const double half_degree = n * k / 2.0;
  const double rings = n * (k - 1) * (1.0 - half_pow(diam - 2));
  double value = 0.0;
  if (t.value == 2) {
    trace.theorem_id = std::string("Thm2.4") + parity;
    value = inner_odd ? half_degree + n * (k - 1) * (1.0 - 3.0 * p)
                      : half_degree + n * (k - 1) * (1.0 - half_pow(diam - 1));
  } else if (t.value == 0) {
    trace.theorem_id = std::string("Thm2.5") + parity;
    value = half_degree + rings +
            (inner_odd ? 2.0 * n * (k - 2) : 1.0 * n * (k - 3)) * p;
  } else {
    trace.theorem_id = std::string("Thm2.3") + parity;
    value = half_degree + rings +
            (inner_odd ? 1.0 * n * (k + t.value - 3) : 1.0 * n * (t.value - 2)) *
                p;
  }
  return FormulaResult::covered_by(value, std::move(trace));
}

inline FormulaResult closeness_odd_k_odd_n(int k, int n, int diam) {
  FormulaTrace trace{.diam = diam};
  if (diam == 1) {
    trace.theorem_id = "Thm2.7-diam1";
    return FormulaResult::covered_by(n * (n - 1) / 2.0, std::move(trace));
  }
  if (diam == 2) {
    trace.theorem_id = "Thm2.7-diam2";
    return FormulaResult::covered_by(
        (1.0 * n * n + 1.0 * n * k - n + 1) / 4.0, std::move(trace));
  }
  const Residue t = residue_t(HararyParams(k, n), ResidueRule::OddKOddN);
  const int a = (diam - 2) * (k - 1);
  const double b = 1.0 - half_pow(diam - 2);
  trace.theorem_id = "Thm2.8";
  trace.t = t;
  trace.ring_vertices = a;
  trace.ring_weight = b;
  const double value =
      (a + 1.0 * k * n + 1) / 2.0 +
      (1.0 * n * t.value - a - 1) * half_pow(diam) +
      (k - 1) * (n * b - (diam - 3) / 2.0 - half_pow(diam - 1));
  return FormulaResult::covered_by(value, std::move(trace));
}

}  // namespace detail

// Total closeness C(H_{k,n}) from the closed forms. The diameter comes from
// diameter_formula(), never from a traversal.
inline FormulaResult closeness_formula(const HararyParams& params) {
  const int k = params.k();
  const int n = params.n();
  if (k == 2) return FormulaResult::not_covered("NotCovered-k2");
  const int diam = detail::harary_diameter(k, n).value;
  switch (params.parity_case()) {
    case ParityCase::EvenK:
      return detail::closeness_even_k(k, n, diam);
    case ParityCase::OddKEvenN:
      return detail::closeness_odd_k_even_n(k, n, diam);
    case ParityCase::OddKOddN:
      return detail::closeness_odd_k_odd_n(k, n, diam);
  }
  return FormulaResult::not_covered("NotCovered");
}

// Vertex classes of the odd-k, odd-n graph: the apex (n-1)/2, the ring
// groups of k-1 vertices flanking it, and the remainder RM.
struct VertexClass {
  enum class Kind { Apex, RingGroup, Remainder };
  Kind kind = Kind::Remainder;
  int group = 0;  // ring index j, 0 <= j <= diam-3

  static VertexClass apex() { return {Kind::Apex, 0}; }
  static VertexClass ring(int j) { return {Kind::RingGroup, j}; }
  static VertexClass remainder() { return {Kind::Remainder, 0}; }

  friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

inline std::string to_string(const VertexClass& c) {
  switch (c.kind) {
    case VertexClass::Kind::Apex:
      return "Apex";
    case VertexClass::Kind::RingGroup:
      return "RingGroup(" + std::to_string(c.group) + ")";
    case VertexClass::Kind::Remainder:
      return "RM";
  }
  return "?";
}

namespace detail {

// Returns the formula diameter after checking the odd/odd, diam > 2 domain.
inline int odd_odd_class_diameter(const HararyParams& params) {
  if (params.parity_case() != ParityCase::OddKOddN) {
    throw ParameterError("vertex classes exist only for odd k and odd n");
  }
  const int diam = harary_diameter(params.k(), params.n()).value;
  if (diam <= 2) {
    throw ParameterError("vertex classes need diameter > 2");
  }
  if ((params.k() - 1) * (diam - 2) + 1 > params.n()) {
    throw ParameterError("ring groups exceed the vertex count");
  }
  return diam;
}

}  // namespace detail

// Vertex v lies in ring group j when v = apex ± ((k-1)/2 * j + i) for some
// 1 <= i <= (k-1)/2 and 0 <= j <= diam-3.
inline VertexClass classify_vertex(const HararyParams& params, Vertex v) {
  const int diam = detail::odd_odd_class_diameter(params);
  if (v < 0 || v >= params.n()) {
    throw ParameterError("vertex " + std::to_string(v) + " out of range");
  }
  const int offset = std::abs(v - params.apex());
  if (offset == 0) return VertexClass::apex();
  const int half = (params.k() - 1) / 2;
  const int j = (offset - 1) / half;
  if (j <= diam - 3) return VertexClass::ring(j);
  return VertexClass::remainder();
}

// Per-vertex closeness of each class. RingGroup(j) is the apex value less
// sum_{m=1}^{j+1} (2^-m - 2^-(m+1)).
inline double vertex_closeness_formula_odd_odd(const HararyParams& params,
                                               const VertexClass& cls) {
  const int diam = detail::odd_odd_class_diameter(params);
  const int k = params.k();
  const int t = residue_t(params, ResidueRule::OddKOddN).value;
  const double rings = (k - 1) * (1.0 - detail::half_pow(diam - 2));
  const double apex =
      (k + 1) / 2.0 + rings + (t - 1) * detail::half_pow(diam);
  switch (cls.kind) {
    case VertexClass::Kind::Apex:
      return apex;
    case VertexClass::Kind::Remainder:
      return k / 2.0 + rings + t * detail::half_pow(diam);
    case VertexClass::Kind::RingGroup: {
      if (cls.group < 0 || cls.group > diam - 3) {
        throw ParameterError("ring group index out of range");
      }
      double value = apex;
      for (int m = 1; m <= cls.group + 1; ++m) {
        value -= detail::half_pow(m) - detail::half_pow(m + 1);
      }
      return value;
    }
  }
  return 0.0;
}

// 1 * Apex + (k-1) * sum_j RingGroup(j) + |RM| * RM.
inline double class_reconstruction(const HararyParams& params) {
  const int diam = detail::odd_odd_class_diameter(params);
  const int k = params.k();
  double total = vertex_closeness_formula_odd_odd(params, VertexClass::apex());
  for (int j = 0; j <= diam - 3; ++j) {
    total += (k - 1) *
             vertex_closeness_formula_odd_odd(params, VertexClass::ring(j));
  }
  const int remainder = params.n() - 1 - (k - 1) * (diam - 2);
  total += remainder * vertex_closeness_formula_odd_odd(
                           params, VertexClass::remainder());
  return total;
}

// Closeness of the consecutive circulant C_{n,[l]} via the even-k rule with
// k = 2l; diam is ceil(n/2l) when t != 0 and floor(n/2l) when t = 0.
inline FormulaResult circulant_closeness_formula(int n, int l) {
  if (n < 2 || l < 1 || l > n / 2) {
    throw ParameterError("step bound l must lie in [1, n/2]");
  }
  const int two_l = 2 * l;
  const Residue t{(n - 1) % two_l, two_l};
  FormulaTrace trace{.t = t};
  if (t.value != 0) {
    const int diam = detail::ceil_div(n, two_l);
    trace.theorem_id = "Cor2.10-tnz";
    trace.diam = diam;
    return FormulaResult::covered_by(
        n * (two_l + detail::half_pow(diam) * (t.value - 4 * l)),
        std::move(trace));
  }
  const int diam = n / two_l;
  trace.theorem_id = "Cor2.10-t0";
  trace.diam = diam;
  return FormulaResult::covered_by(
      2.0 * n * l * (1.0 - detail::half_pow(diam)), std::move(trace));
}

namespace detail {

inline FormulaResult residual_even_k(const HararyParams& params, double c,
                                     int diam) {
  const int k = params.k();
  const int n = params.n();
  const double shrunk = (n - 2) * c / n;
  FormulaTrace trace{.t = Residue{n % k, k}, .diam = diam};
  const bool n_one = n % k == 1;
  if (diam > 2 || (diam == 2 && n_one)) {
    if (n_one) {
      trace.theorem_id = diam > 2 ? "Thm3.1-n1" : "Rem3.2-diam2-n1";
      trace.removal_delta = tail_sum(diam);
      return FormulaResult::covered_by(
          shrunk - 1.0 + half_pow(diam) * (1 + diam), std::move(trace));
    }
    trace.theorem_id = "Thm3.1-other";
    trace.removal_delta = tail_sum(diam - 1);
    return FormulaResult::covered_by(
        shrunk - 1.0 + half_pow(diam - 1) * diam, std::move(trace));
  }
  trace.theorem_id = "Rem3.2-vanishing";
  trace.removal_delta = 0.0;
  return FormulaResult::covered_by(shrunk, std::move(trace));
}

inline FormulaResult residual_odd_k_even_n(const HararyParams& params,
                                           double c, int diam) {
  const int k = params.k();
  const int n = params.n();
  if (diam <= 2) {
    return FormulaResult::not_covered("NotCovered-oddK-evenN-diam<=2");
  }
  const double shrunk = (n - 2) * c / n;
  FormulaTrace trace{.diam = diam};
  if (k == 3) {
    if (n == 4 * diam) {
      trace.theorem_id = "Cor3.4-n4d";
      trace.removal_delta = 1.5 - (2 * diam + 1) * half_pow(diam);
      return FormulaResult::covered_by(
          shrunk - 1.5 + (2 * diam + 1) * half_pow(diam), std::move(trace));
    }
    trace.theorem_id = "Cor3.4-other";
    trace.removal_delta = 1.5 * tail_sum(diam - 1);
    return FormulaResult::covered_by(
        shrunk - 1.5 * (1.0 - diam * half_pow(diam - 1)), std::move(trace));
  }
  if (n == (k - 1) * (2 * diam - 1) + 2) {
    trace.theorem_id = "Thm3.3-boundary";
    trace.removal_delta = tail_sum(diam);
    return FormulaResult::covered_by(
        shrunk - (1.0 - (1 + diam) * half_pow(diam)), std::move(trace));
  }
  trace.theorem_id = "Thm3.3-other";
  trace.removal_delta = tail_sum(diam - 1);
  return FormulaResult::covered_by(
      shrunk - (1.0 - diam * half_pow(diam - 1)), std::move(trace));
}

inline FormulaResult residual_odd_k_odd_n(const HararyParams& params,
                                          double c, int diam) {
  const int k = params.k();
  const int n = params.n();
  if (k == 3) {
    if (diam > 3) {
      const Residue t = residue_t(params, ResidueRule::K3Odd);
      FormulaTrace trace{.t = t, .diam = diam};
      if (t.value == 3) {
        trace.theorem_id = "Cor3.6-t3";
        trace.removal_delta = 3.75 - (16 * diam - 2) * half_pow(diam + 1);
        return FormulaResult::covered_by(
            c - 11.75 + (8 * diam + 11) * half_pow(diam), std::move(trace));
      }
      trace.theorem_id = "Cor3.6-t1";
      trace.removal_delta = 3.75 - (9 * diam - 3) * half_pow(diam);
      return FormulaResult::covered_by(
          c - 11.75 + (9 * diam + 13) * half_pow(diam), std::move(trace));
    }
    FormulaTrace trace{.theorem_id = "Rem3.7-table", .diam = diam};
    switch (n) {
      case 5:
        return FormulaResult::covered_by(5.0, std::move(trace));
      case 7:
        return FormulaResult::covered_by(11.0, std::move(trace));
      case 9:
        return FormulaResult::covered_by(17.5, std::move(trace));
      case 11:
        return FormulaResult::covered_by(24.875, std::move(trace));
      default:
        return FormulaResult::not_covered("NotCovered-k3-oddN-diam<=3");
    }
  }
  if (diam <= 2) {
    return FormulaResult::not_covered("NotCovered-oddK-oddN-diam<=2");
  }
  const Residue t = residue_t(params, ResidueRule::OddKOddN);
  FormulaTrace trace{.theorem_id = "Thm3.5", .t = t, .diam = diam};
  trace.removal_delta = 3.0 * tail_sum(diam - 1);
  return FormulaResult::covered_by(
      c - 3.0 * k - 2.0 +
          (4 * k - 3 - t.value + 3 * diam) * half_pow(diam - 1),
      std::move(trace));
}

}  // namespace detail

// Vertex residual closeness R(H_{k,n}) from the closed forms, or an
// uncovered result naming the gap.
inline FormulaResult residual_formula(const HararyParams& params) {
  if (params.k() == 2) return FormulaResult::not_covered("NotCovered-k2");
  const double c = *closeness_formula(params).value;
  const int diam = detail::harary_diameter(params.k(), params.n()).value;
  switch (params.parity_case()) {
    case ParityCase::EvenK:
      return detail::residual_even_k(params, c, diam);
    case ParityCase::OddKEvenN:
      return detail::residual_odd_k_even_n(params, c, diam);
    case ParityCase::OddKOddN:
      return detail::residual_odd_k_odd_n(params, c, diam);
  }
  return FormulaResult::not_covered("NotCovered");
}

}  // namespace harary
