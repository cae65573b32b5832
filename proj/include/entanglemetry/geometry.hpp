// Copyright 2026 The Entanglemetry Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "entanglemetry/bipartition.hpp"

namespace entanglemetry {

// Threshold policy for inequality checks. Satisfaction is judged at
// margin >= -inequality; strictness needs margin > strict with every
// relevant concurrence above zero_threshold.
struct Tolerances {
  double inequality = 1e-9;
  double strict = 1e-12;
  double zero_threshold = kZeroThreshold;
};

// Side lengths are squared concurrences (F) or concurrences (F1).
enum class SideMode { kSquared, kConcurrence };

std::string_view to_string(SideMode mode);

struct TriangleSides {
  std::array<double, 3> sides{};
  std::array<Bipartition, 3> cuts{};  // optional provenance of each side

  double min_margin() const;
  friend bool operator==(const TriangleSides&, const TriangleSides&) = default;
};

// Stable Heron area: sides sorted descending and evaluated as
// 1/4 sqrt((a+(b+c))(c-(a-b))(c+(a-b))(a+(b-c))).
// Throws NegativeSide, or TriangleViolation when the triangle margin is
// below -triangle_slack.
double heron_area(const TriangleSides& t, double triangle_slack = 1e-9);
double heron_area(double a, double b, double c, double triangle_slack = 1e-9);

// sum_{j != i} C^2_{j|rest} - C^2_{i|rest}.
double polygon_margin(const ConcurrenceProfile& profile, int party);

// Margins (x_i + x_j - d, d + x_i - x_j, d + x_j - x_i) for the pair on
// side_a of the diagonal, and the same for the pair on side_b.
struct TriangleMarginSet {
  std::array<double, 3> first{};
  std::array<double, 3> second{};

  double min() const;
};

TriangleMarginSet triangle_margins(const ConcurrenceProfile& profile,
                                   const Bipartition& diagonal, SideMode mode);

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

// Quadrilateral with the four one-to-rest values as sides and a two-to-two
// value as diagonal. Vertex order is P0, apex_1, P1, apex_2 with the diagonal
// P0 = (0,0) -> P1 = (d,0), apex_1 above the axis and apex_2 below, so the
// edges are side_i, side_j, side_l, side_k in cyclic order.
struct QuadrilateralGeometry {
  Bipartition diagonal_cut;
  SideMode mode = SideMode::kSquared;
  std::array<Bipartition, 4> side_cuts{};  // i, j, k, l
  std::array<double, 4> sides{};
  double diagonal = 0.0;
  TriangleSides triangle_1;
  TriangleSides triangle_2;
  double area_1 = 0.0;
  double area_2 = 0.0;
  std::array<bool, 2> degenerate{};
  std::array<Point, 4> vertices{};

  friend bool operator==(const QuadrilateralGeometry&, const QuadrilateralGeometry&) = default;
};

// A triangle is degenerate (area exactly 0) when any of its cuts has
// concurrence below tol.zero_threshold.
QuadrilateralGeometry build_quadrilateral(const ConcurrenceProfile& profile,
                                          const Bipartition& diagonal, SideMode mode,
                                          const Tolerances& tol = {});

enum class InequalityKind {
  kPolygon,
  kTriangle,
  kStrictDiff,
  kStrictSum,
  kSumOfThree,
  kSharpenedSubadditivity,
};

enum class Verdict { kPass, kFail, kNotApplicable };

std::string_view to_string(InequalityKind kind);
std::string_view to_string(Verdict verdict);

struct InequalityReport {
  InequalityKind kind = InequalityKind::kPolygon;
  std::string label;
  double margin = 0.0;
  Verdict verdict = Verdict::kNotApplicable;
};

// For both triangles of the diagonal: the strict sum margin
// C2_i + C2_j - C2_d, the strict difference margin C2_d - |C2_i - C2_j|, and
// the sharpened subadditivity margin
// S_i + S_j - 2 (1 - sqrt(1 - S_i)) (1 - sqrt(1 - S_j)) - S_ij
// in linear-entropy units S = C^2 / 2. Strict reports are NotApplicable
// unless all three concurrences exceed the zero threshold.
std::vector<InequalityReport> strictness_margins(const ConcurrenceProfile& profile,
                                                 const Bipartition& diagonal,
                                                 const Tolerances& tol = {});

// |C^2_{i|rest} - sum_{j != i} C^2_{j|rest}|.
double sum_of_three_margin(const ConcurrenceProfile& profile, int party);
// NotApplicable unless at least three one-to-rest concurrences are nonzero.
InequalityReport sum_of_three_report(const ConcurrenceProfile& profile, int party,
                                     const Tolerances& tol = {});

// The three two-to-two cuts AB|CD, AC|BD, AD|BC.
std::array<Bipartition, 3> two_to_two_cuts();

}  // namespace entanglemetry
