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
#include <cmath>
#include <span>
#include <vector>

#include "entanglemetry/geometry.hpp"

namespace entanglemetry {

// 4/sqrt(3): maps an equilateral triangle of unit sides to unit area.
inline const double kAreaNormalization = 4.0 / std::sqrt(3.0);

enum class SeparabilityKind {
  kGenuinelyEntangled,
  kOneToRestSeparable,
  kTwoToTwoSeparable,
  kFullyProduct,
};

std::string_view to_string(SeparabilityKind kind);
SeparabilityKind separability_kind_from_string(std::string_view text);

struct SeparabilityClass {
  SeparabilityKind kind = SeparabilityKind::kGenuinelyEntangled;
  std::vector<Bipartition> separable_cuts;

  friend bool operator==(const SeparabilityClass&, const SeparabilityClass&) = default;
};

// One of the six triangles: diagonal AB|CD, AC|BD or AD|BC, half 0 (pair on
// the side holding A) or 1.
struct TriangleRecord {
  Bipartition diagonal;
  int half = 0;
  std::array<Bipartition, 3> cuts{};
  std::array<double, 3> sides_squared{};
  std::array<double, 3> sides_concurrence{};
  double area_squared_mode = 0.0;
  double area_concurrence_mode = 0.0;
  bool degenerate = false;

  friend bool operator==(const TriangleRecord&, const TriangleRecord&) = default;
};

struct GmeReport {
  double f = 0.0;
  double f1 = 0.0;
  double normalization = kAreaNormalization;
  std::array<TriangleRecord, 6> triangles{};
  SeparabilityClass separability;

  friend bool operator==(const GmeReport&, const GmeReport&) = default;
};

// Triangles in the order (AB|CD, AC|BD, AD|BC) x (first pair, second pair).
std::array<TriangleSides, 6> six_triangles(const ConcurrenceProfile& profile, SideMode mode);

// (prod_i k A_i)^(1/6) with k = 4/sqrt(3); exactly 0 if any area is 0.
double scaled_geometric_mean(std::span<const double, 6> areas);

GmeReport gme_report(const ConcurrenceProfile& profile, const Tolerances& tol = {});
GmeReport gme_report(const StateVector& state, const Tolerances& tol = {});
double gme_f(const StateVector& state);
double gme_f1(const StateVector& state);

// (4/sqrt(3)) * Heron area of the squared-concurrence triangle of a 3-qubit
// state; 0 when any cut is separable.
double concurrence_fill(const ConcurrenceProfile& profile, const Tolerances& tol = {});
double concurrence_fill_3q(const StateVector& state, const Tolerances& tol = {});

SeparabilityClass classify_separability(const ConcurrenceProfile& profile,
                                        double zero_threshold = kZeroThreshold);

}  // namespace entanglemetry
