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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entanglemetry/catalog.hpp"
#include "entanglemetry/geometry.hpp"
#include "entanglemetry/measures.hpp"

namespace entanglemetry {

// Per-sample checks. Margin semantics:
//   T1, T2*          raw inequality margin; fail iff margin < -tolerance.
//   T3, T4           strictness margin; fail iff margin <= 1e-12 while every
//                    involved concurrence exceeds zero_threshold, otherwise
//                    NotApplicable. T3 also fails on a sharpened-subadditivity
//                    margin below -tolerance.
//   Fig2, LU         tolerance - deviation; fail iff negative.
//   Fig3             1e-6 - deviation; fail iff negative.
//   Permutation      1e-12 - deviation; fail iff negative.
//   Saturation       min of the adjacency (1e-6 - deviation) and strictness
//                    margins of every probe-able triangle.
enum class Check {
  kT1,
  kT2Squared,
  kT2Unsquared,
  kT3Strict,
  kT4Sum,
  kFig2Reduction,
  kFig3Collinear,
  kLuInvariance,
  kPermutationInvariance,
  kSaturation,
};

inline constexpr double kFig3Tolerance = 1e-6;
inline constexpr double kPermutationTolerance = 1e-12;
inline constexpr double kStrictTolerance = 1e-12;
inline constexpr int kHistogramBins = 64;

// Short names: t1, t2sq, t2c, t3, t4, fig2, fig3, lu, perm, saturation.
std::string_view to_string(Check check);
Check check_from_string(std::string_view name);
// Every check except saturation, in enum order.
std::vector<Check> default_checks();

struct CampaignConfig {
  EnsembleSpec ensemble;
  std::vector<Check> checks = default_checks();
  double tolerance = 1e-9;
  double zero_threshold = kZeroThreshold;
  bool fail_fast = false;
  int threads = 0;  // <= 0: OpenMP default; never affects the result

  // InvalidCount / InvalidConfig on bad settings.
  void validate() const;
};

struct Violation {
  std::size_t index = 0;
  double margin = 0.0;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CheckResult {
  Check check = Check::kT1;
  std::size_t count = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;
  std::size_t not_applicable = 0;
  std::vector<Violation> violations;  // sorted by sample index
  std::optional<double> min_margin;   // over applicable samples
  std::array<std::uint64_t, kHistogramBins> histogram{};

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct CampaignResult {
  EnsembleSpec ensemble;
  double tolerance = 0.0;
  double zero_threshold = 0.0;
  bool fail_fast = false;
  std::size_t samples_evaluated = 0;
  bool stopped_early = false;
  std::vector<CheckResult> checks;
  bool pass = true;

  friend bool operator==(const CampaignResult&, const CampaignResult&) = default;
};

struct SampleOutcome {
  Verdict verdict = Verdict::kNotApplicable;
  double margin = 0.0;
};

// 64 log-spaced bins over [1e-12, 4]; margins at or below 1e-12 land in bin 0.
int histogram_bin(double margin);

// Outcome of one check on one state.
SampleOutcome evaluate_check(Check check, const StateVector& state,
                             const ConcurrenceProfile& profile, const CampaignConfig& cfg,
                             std::size_t index);

// OpenMP over samples, serial index-ordered aggregation.
CampaignResult run_campaign(const CampaignConfig& cfg);

// run_campaign restricted to the saturation check.
CampaignResult saturation_probe(const CampaignConfig& cfg);

namespace reference {
CampaignResult run_campaign_serial(const CampaignConfig& cfg);
}  // namespace reference

}  // namespace entanglemetry
