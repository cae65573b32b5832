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

#include "entanglemetry/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "entanglemetry/error.hpp"

namespace entanglemetry {

namespace {

// Below this the diagonal is treated as zero when placing vertices.
constexpr double kCollinearDiagonal = 1e-12;

void require_four_qubits(const ConcurrenceProfile& profile) {
  if (profile.num_qubits() != 4) {
    throw Error(ErrorCode::kUnsupportedSize, "quadrilateral geometry needs a 4-qubit profile");
  }
}

void require_two_to_two(const Bipartition& diagonal) {
  if (diagonal.num_qubits() != 4 || diagonal.kind() != CutKind::kTwoToTwo) {
    throw Error(ErrorCode::kNotTwoToTwo, "cut " + diagonal.label() + " is not two-to-two");
  }
}

double side_value(const ProfileEntry& e, SideMode mode) {
  return mode == SideMode::kSquared ? e.c2 : e.c;
}

std::array<double, 3> margins_of(double x, double y, double d) {
  return {x + y - d, d + x - y, d + y - x};
}

Bipartition one_to_rest(int party) { return Bipartition::canonical(4, QubitSubset(1u << party)); }

}  // namespace

std::string_view to_string(SideMode mode) {
  return mode == SideMode::kSquared ? "squared" : "concurrence";
}

double TriangleSides::min_margin() const {
  const auto& [a, b, c] = sides;
  return std::min({a + b - c, b + c - a, c + a - b});
}

double heron_area(double a, double b, double c, double triangle_slack) {
  if (!(a >= 0.0) || !(b >= 0.0) || !(c >= 0.0)) {
    throw Error(ErrorCode::kNegativeSide, "triangle side is negative or NaN");
  }
  std::array<double, 3> s{a, b, c};
  std::sort(s.begin(), s.end(), std::greater<>());
  const double x = s[0];
  const double y = s[1];
  const double z = s[2];
  if (z - (x - y) < -triangle_slack) {
    throw Error(ErrorCode::kTriangleViolation,
                "sides (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                    std::to_string(c) + ") violate the triangle inequality");
  }
  // A flatness residual within rounding of the longest side is a flat triangle;
  // otherwise sides like (a, b, fl(a + b)) would report a spurious sliver.
  if (z - (x - y) <= 4.0 * std::numeric_limits<double>::epsilon() * x) return 0.0;
  const double radicand = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
  if (radicand <= 0.0) return 0.0;
  return 0.25 * std::sqrt(radicand);
}

double heron_area(const TriangleSides& t, double triangle_slack) {
  return heron_area(t.sides[0], t.sides[1], t.sides[2], triangle_slack);
}

double polygon_margin(const ConcurrenceProfile& profile, int party) {
  require_four_qubits(profile);
  double others = 0.0;
  for (int j = 0; j < 4; ++j) {
    if (j != party) others += profile.one_to_rest_c2(j);
  }
  return others - profile.one_to_rest_c2(party);
}

double TriangleMarginSet::min() const {
  return std::min(*std::min_element(first.begin(), first.end()),
                  *std::min_element(second.begin(), second.end()));
}

TriangleMarginSet triangle_margins(const ConcurrenceProfile& profile,
                                   const Bipartition& diagonal, SideMode mode) {
  require_four_qubits(profile);
  require_two_to_two(diagonal);
  const auto ij = diagonal.side_a().qubits();
  const auto kl = diagonal.side_b().qubits();
  const double d = side_value(profile.at(diagonal), mode);
  auto value = [&](int party) { return side_value(profile.at(one_to_rest(party)), mode); };
  return {margins_of(value(ij[0]), value(ij[1]), d), margins_of(value(kl[0]), value(kl[1]), d)};
}

QuadrilateralGeometry build_quadrilateral(const ConcurrenceProfile& profile,
                                          const Bipartition& diagonal, SideMode mode,
                                          const Tolerances& tol) {
  require_four_qubits(profile);
  require_two_to_two(diagonal);
  const auto ij = diagonal.side_a().qubits();
  const auto kl = diagonal.side_b().qubits();
  const std::array<int, 4> parties{ij[0], ij[1], kl[0], kl[1]};

  QuadrilateralGeometry g;
  g.diagonal_cut = diagonal;
  g.mode = mode;
  const ProfileEntry& diag_entry = profile.at(diagonal);
  g.diagonal = side_value(diag_entry, mode);
  std::array<bool, 4> side_zero{};
  for (std::size_t s = 0; s < 4; ++s) {
    g.side_cuts[s] = one_to_rest(parties[s]);
    const ProfileEntry& e = profile.at(g.side_cuts[s]);
    g.sides[s] = side_value(e, mode);
    side_zero[s] = is_separable(e, tol.zero_threshold);
  }
  const bool diag_zero = is_separable(diag_entry, tol.zero_threshold);

  g.triangle_1 = {{g.sides[0], g.sides[1], g.diagonal},
                  {g.side_cuts[0], g.side_cuts[1], diagonal}};
  g.triangle_2 = {{g.sides[2], g.sides[3], g.diagonal},
                  {g.side_cuts[2], g.side_cuts[3], diagonal}};
  const double raw_1 = heron_area(g.triangle_1, tol.inequality);
  const double raw_2 = heron_area(g.triangle_2, tol.inequality);
  g.degenerate[0] = side_zero[0] || side_zero[1] || diag_zero || raw_1 == 0.0;
  g.degenerate[1] = side_zero[2] || side_zero[3] || diag_zero || raw_2 == 0.0;
  g.area_1 = g.degenerate[0] ? 0.0 : raw_1;
  g.area_2 = g.degenerate[1] ? 0.0 : raw_2;

  const double d = g.diagonal;
  if (!diag_zero && d > kCollinearDiagonal) {
    auto apex = [d](double from_p0, double from_p1, double area, double sign) {
      const double x = (d * d + from_p0 * from_p0 - from_p1 * from_p1) / (2.0 * d);
      return Point{x, sign * 2.0 * area / d};
    };
    g.vertices = {Point{0.0, 0.0}, apex(g.sides[0], g.sides[1], g.area_1, 1.0),
                  Point{d, 0.0}, apex(g.sides[2], g.sides[3], g.area_2, -1.0)};
  } else {
    // Separable diagonal: both triangles fold onto the x-axis.
    g.vertices = {Point{0.0, 0.0}, Point{g.sides[0], 0.0}, Point{d, 0.0},
                  Point{g.sides[2], 0.0}};
  }
  return g;
}

std::string_view to_string(InequalityKind kind) {
  switch (kind) {
    case InequalityKind::kPolygon: return "polygon";
    case InequalityKind::kTriangle: return "triangle";
    case InequalityKind::kStrictDiff: return "strict_diff";
    case InequalityKind::kStrictSum: return "strict_sum";
    case InequalityKind::kSumOfThree: return "sum_of_three";
    case InequalityKind::kSharpenedSubadditivity: return "sharpened_subadditivity";
  }
  return "unknown";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kNotApplicable: return "not_applicable";
  }
  return "unknown";
}

std::vector<InequalityReport> strictness_margins(const ConcurrenceProfile& profile,
                                                 const Bipartition& diagonal,
                                                 const Tolerances& tol) {
  require_four_qubits(profile);
  require_two_to_two(diagonal);
  const ProfileEntry& d = profile.at(diagonal);
  const std::string dlabel = diagonal.label();

  std::vector<InequalityReport> out;
  for (const auto& pair : {diagonal.side_a().qubits(), diagonal.side_b().qubits()}) {
    const ProfileEntry& p = profile.at(one_to_rest(pair[0]));
    const ProfileEntry& q = profile.at(one_to_rest(pair[1]));
    const std::string pl(1, party_letter(pair[0]));
    const std::string ql(1, party_letter(pair[1]));
    const bool applicable = !is_separable(p, tol.zero_threshold) &&
                            !is_separable(q, tol.zero_threshold) &&
                            !is_separable(d, tol.zero_threshold);
    auto strict = [&](InequalityKind kind, std::string label, double margin) {
      const Verdict v = !applicable        ? Verdict::kNotApplicable
                        : margin > tol.strict ? Verdict::kPass
                                              : Verdict::kFail;
      out.push_back({kind, std::move(label), margin, v});
    };
    strict(InequalityKind::kStrictSum, pl + "+" + ql + ">" + dlabel, p.c2 + q.c2 - d.c2);
    strict(InequalityKind::kStrictDiff, "|" + pl + "-" + ql + "|<" + dlabel,
           d.c2 - std::abs(p.c2 - q.c2));

    const double sp = 0.5 * p.c2;
    const double sq = 0.5 * q.c2;
    const double bound = sp + sq - 2.0 * (1.0 - std::sqrt(1.0 - sp)) * (1.0 - std::sqrt(1.0 - sq));
    const double margin = bound - 0.5 * d.c2;
    out.push_back({InequalityKind::kSharpenedSubadditivity, "sharp(" + pl + "," + ql + ")>=" + dlabel,
                   margin, margin >= -tol.inequality ? Verdict::kPass : Verdict::kFail});
  }
  return out;
}

double sum_of_three_margin(const ConcurrenceProfile& profile, int party) {
  require_four_qubits(profile);
  double others = 0.0;
  for (int j = 0; j < 4; ++j) {
    if (j != party) others += profile.one_to_rest_c2(j);
  }
  return std::abs(profile.one_to_rest_c2(party) - others);
}

InequalityReport sum_of_three_report(const ConcurrenceProfile& profile, int party,
                                     const Tolerances& tol) {
  const double margin = sum_of_three_margin(profile, party);
  int nonzero = 0;
  for (int j = 0; j < 4; ++j) {
    if (profile.one_to_rest_c(j) >= tol.zero_threshold) ++nonzero;
  }
  Verdict v = Verdict::kNotApplicable;
  if (nonzero >= 3) v = margin > tol.strict ? Verdict::kPass : Verdict::kFail;
  return {InequalityKind::kSumOfThree, std::string(1, party_letter(party)) + "!=sum(rest)",
          margin, v};
}

std::array<Bipartition, 3> two_to_two_cuts() {
  return {Bipartition::canonical(4, QubitSubset::of({0, 1})),
          Bipartition::canonical(4, QubitSubset::of({0, 2})),
          Bipartition::canonical(4, QubitSubset::of({0, 3}))};
}

}  // namespace entanglemetry
