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

#include "entanglemetry/measures.hpp"

#include <cmath>
#include <string>

#include "entanglemetry/error.hpp"

namespace entanglemetry {

std::string_view to_string(SeparabilityKind kind) {
  switch (kind) {
    case SeparabilityKind::kGenuinelyEntangled: return "genuinely_entangled";
    case SeparabilityKind::kOneToRestSeparable: return "one_to_rest_separable";
    case SeparabilityKind::kTwoToTwoSeparable: return "two_to_two_separable";
    case SeparabilityKind::kFullyProduct: return "fully_product";
  }
  return "unknown";
}

SeparabilityKind separability_kind_from_string(std::string_view text) {
  for (auto k : {SeparabilityKind::kGenuinelyEntangled, SeparabilityKind::kOneToRestSeparable,
                 SeparabilityKind::kTwoToTwoSeparable, SeparabilityKind::kFullyProduct}) {
    if (to_string(k) == text) return k;
  }
  throw Error(ErrorCode::kMalformedInput, "unknown separability class " + std::string(text));
}

std::array<TriangleSides, 6> six_triangles(const ConcurrenceProfile& profile, SideMode mode) {
  std::array<TriangleSides, 6> out;
  std::size_t slot = 0;
  for (const auto& diag : two_to_two_cuts()) {
    const auto quad = build_quadrilateral(profile, diag, mode);
    out[slot++] = quad.triangle_1;
    out[slot++] = quad.triangle_2;
  }
  return out;
}

double scaled_geometric_mean(std::span<const double, 6> areas) {
  double log_sum = 0.0;
  for (double a : areas) {
    if (!(a > 0.0)) return 0.0;
    log_sum += std::log(kAreaNormalization * a);
  }
  return std::exp(log_sum / 6.0);
}

GmeReport gme_report(const ConcurrenceProfile& profile, const Tolerances& tol) {
  if (profile.num_qubits() != 4) {
    throw Error(ErrorCode::kUnsupportedSize, "F and F1 are defined for 4-qubit states only");
  }
  GmeReport report;
  std::array<double, 6> sq_areas{};
  std::array<double, 6> c_areas{};
  std::size_t slot = 0;
  for (const auto& diag : two_to_two_cuts()) {
    const auto sq = build_quadrilateral(profile, diag, SideMode::kSquared, tol);
    const auto cq = build_quadrilateral(profile, diag, SideMode::kConcurrence, tol);
    for (int half = 0; half < 2; ++half) {
      TriangleRecord& t = report.triangles[slot];
      const auto& tri_sq = half == 0 ? sq.triangle_1 : sq.triangle_2;
      const auto& tri_c = half == 0 ? cq.triangle_1 : cq.triangle_2;
      t.diagonal = diag;
      t.half = half;
      t.cuts = tri_sq.cuts;
      t.sides_squared = tri_sq.sides;
      t.sides_concurrence = tri_c.sides;
      t.degenerate = sq.degenerate[half] || cq.degenerate[half];
      t.area_squared_mode = t.degenerate ? 0.0 : (half == 0 ? sq.area_1 : sq.area_2);
      t.area_concurrence_mode = t.degenerate ? 0.0 : (half == 0 ? cq.area_1 : cq.area_2);
      sq_areas[slot] = t.area_squared_mode;
      c_areas[slot] = t.area_concurrence_mode;
      ++slot;
    }
  }
  report.f = scaled_geometric_mean(sq_areas);
  report.f1 = scaled_geometric_mean(c_areas);
  report.separability = classify_separability(profile, tol.zero_threshold);
  return report;
}

GmeReport gme_report(const StateVector& state, const Tolerances& tol) {
  if (state.num_qubits() != 4) {
    throw Error(ErrorCode::kUnsupportedSize, "F and F1 are defined for 4-qubit states only");
  }
  return gme_report(profile(state), tol);
}

double gme_f(const StateVector& state) { return gme_report(state).f; }

double gme_f1(const StateVector& state) { return gme_report(state).f1; }

double concurrence_fill(const ConcurrenceProfile& profile, const Tolerances& tol) {
  if (profile.num_qubits() != 3) {
    throw Error(ErrorCode::kUnsupportedSize, "concurrence fill is defined for 3-qubit states");
  }
  std::array<double, 3> sides{};
  for (int party = 0; party < 3; ++party) {
    const auto& e = profile.at(Bipartition::canonical(3, QubitSubset(1u << party)));
    if (is_separable(e, tol.zero_threshold)) return 0.0;
    sides[party] = e.c2;
  }
  return kAreaNormalization * heron_area(sides[0], sides[1], sides[2], tol.inequality);
}

double concurrence_fill_3q(const StateVector& state, const Tolerances& tol) {
  if (state.num_qubits() != 3) {
    throw Error(ErrorCode::kUnsupportedSize, "concurrence fill is defined for 3-qubit states");
  }
  return concurrence_fill(profile(state), tol);
}

SeparabilityClass classify_separability(const ConcurrenceProfile& profile, double zero_threshold) {
  SeparabilityClass out;
  bool any_one_to_rest = false;
  for (const auto& e : profile.entries()) {
    if (!is_separable(e, zero_threshold)) continue;
    out.separable_cuts.push_back(e.cut);
    if (e.cut.kind() == CutKind::kOneToRest) any_one_to_rest = true;
  }
  if (out.separable_cuts.empty()) {
    out.kind = SeparabilityKind::kGenuinelyEntangled;
  } else if (out.separable_cuts.size() == profile.entries().size()) {
    out.kind = SeparabilityKind::kFullyProduct;
  } else if (any_one_to_rest) {
    out.kind = SeparabilityKind::kOneToRestSeparable;
  } else {
    out.kind = SeparabilityKind::kTwoToTwoSeparable;
  }
  return out;
}

}  // namespace entanglemetry
