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

#include "entanglemetry/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <string>

#include "entanglemetry/error.hpp"

namespace entanglemetry {

namespace {

constexpr std::size_t kBlockSize = 4096;
constexpr std::uint64_t kUnitaryStream = 1;

constexpr std::array<Check, 10> kAllChecks = {
    Check::kT1,           Check::kT2Squared,     Check::kT2Unsquared,
    Check::kT3Strict,     Check::kT4Sum,         Check::kFig2Reduction,
    Check::kFig3Collinear, Check::kLuInvariance, Check::kPermutationInvariance,
    Check::kSaturation};

Tolerances tolerances_of(const CampaignConfig& cfg) {
  return {cfg.tolerance, kStrictTolerance, cfg.zero_threshold};
}

SampleOutcome inequality(double margin, double tolerance) {
  return {margin >= -tolerance ? Verdict::kPass : Verdict::kFail, margin};
}

SampleOutcome bounded(double bound, double deviation) {
  const double margin = bound - deviation;
  return {margin >= 0.0 ? Verdict::kPass : Verdict::kFail, margin};
}

SampleOutcome check_t1(const ConcurrenceProfile& p, const CampaignConfig& cfg) {
  double m = std::numeric_limits<double>::infinity();
  for (int party = 0; party < 4; ++party) m = std::min(m, polygon_margin(p, party));
  return inequality(m, cfg.tolerance);
}

SampleOutcome check_t2(const ConcurrenceProfile& p, SideMode mode, const CampaignConfig& cfg) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& diag : two_to_two_cuts()) m = std::min(m, triangle_margins(p, diag, mode).min());
  return inequality(m, cfg.tolerance);
}

// Folds three-valued reports: any failure fails, any pass passes.
SampleOutcome fold_reports(const std::vector<InequalityReport>& reports) {
  SampleOutcome out;
  double min_applicable = std::numeric_limits<double>::infinity();
  bool any_fail = false;
  bool any_pass = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::kNotApplicable) continue;
    min_applicable = std::min(min_applicable, r.margin);
    any_fail |= r.verdict == Verdict::kFail;
    any_pass |= r.verdict == Verdict::kPass;
  }
  if (any_fail) {
    out = {Verdict::kFail, min_applicable};
  } else if (any_pass) {
    out = {Verdict::kPass, min_applicable};
  }
  return out;
}

SampleOutcome check_t3(const ConcurrenceProfile& p, const CampaignConfig& cfg) {
  std::vector<InequalityReport> reports;
  bool strict_applicable = false;
  for (const auto& diag : two_to_two_cuts()) {
    for (auto& r : strictness_margins(p, diag, tolerances_of(cfg))) {
      if (r.kind != InequalityKind::kSharpenedSubadditivity && r.verdict != Verdict::kNotApplicable) {
        strict_applicable = true;
      }
      reports.push_back(std::move(r));
    }
  }
  SampleOutcome out = fold_reports(reports);
  if (out.verdict == Verdict::kPass && !strict_applicable) out.verdict = Verdict::kNotApplicable;
  return out;
}

SampleOutcome check_t4(const ConcurrenceProfile& p, const CampaignConfig& cfg) {
  std::vector<InequalityReport> reports;
  for (int party = 0; party < 4; ++party) {
    reports.push_back(sum_of_three_report(p, party, tolerances_of(cfg)));
  }
  return fold_reports(reports);
}

// For psi = phi_p (x) chi, returns chi over the remaining qubits in order.
StateVector split_off_party(const StateVector& state, int party) {
  const DensityMatrix rho = reduced_density(state, QubitSubset(1u << party));
  const Complex a = rho(0, 0);
  const Complex b = rho(0, 1);
  const Complex d = rho(1, 1);
  const double half_gap = 0.5 * (a.real() - d.real());
  const double lambda = 0.5 * (a.real() + d.real()) + std::hypot(half_gap, std::abs(b));
  // Two candidate eigenvectors for the top eigenvalue; take the better scaled.
  Complex v0 = b;
  Complex v1 = lambda - a.real();
  const Complex w0 = lambda - d.real();
  const Complex w1 = std::conj(b);
  if (std::norm(w0) + std::norm(w1) > std::norm(v0) + std::norm(v1)) {
    v0 = w0;
    v1 = w1;
  }

  const int n = state.num_qubits();
  const std::size_t bit = std::size_t{1} << (n - 1 - party);
  std::vector<Complex> chi(state.dimension() / 2);
  for (std::size_t full = 0; full < state.dimension(); ++full) {
    // Compact index of the other qubits: drop the party's bit.
    const std::size_t high = (full >> (n - party)) << (n - 1 - party);
    const std::size_t low = full & (bit - 1);
    const std::size_t r = high | low;
    chi[r] += std::conj((full & bit) ? v1 : v0) * state[full];
  }
  return StateVector::from_amplitudes(n - 1, std::move(chi));
}

SampleOutcome check_fig2(const StateVector& state, const ConcurrenceProfile& p,
                         const CampaignConfig& cfg) {
  int separable_party = -1;
  for (int party = 0; party < 4; ++party) {
    if (p.one_to_rest_c(party) < cfg.zero_threshold) {
      if (separable_party >= 0) return {};
      separable_party = party;
    }
  }
  if (separable_party < 0) return {};
  const double fill = concurrence_fill_3q(split_off_party(state, separable_party),
                                          tolerances_of(cfg));
  double deviation = 0.0;
  for (const auto& diag : two_to_two_cuts()) {
    const auto quad = build_quadrilateral(p, diag, SideMode::kSquared, tolerances_of(cfg));
    const bool first_holds_party = diag.side_a().contains(separable_party);
    const int flat = first_holds_party ? 0 : 1;
    const double live_area = first_holds_party ? quad.area_2 : quad.area_1;
    if (!quad.degenerate[flat]) return {Verdict::kFail, std::numeric_limits<double>::lowest()};
    deviation = std::max(deviation, std::abs(kAreaNormalization * live_area - fill));
  }
  return bounded(cfg.tolerance, deviation);
}

SampleOutcome check_fig3(const ConcurrenceProfile& p, const CampaignConfig& cfg) {
  const auto diags = two_to_two_cuts();
  bool applicable = false;
  double deviation = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    if (!is_separable(p.at(diags[k]), cfg.zero_threshold)) continue;
    applicable = true;
    const auto ij = diags[k].side_a().qubits();
    const auto kl = diags[k].side_b().qubits();
    const double other_1 = p.at(diags[(k + 1) % 3]).c2;
    const double other_2 = p.at(diags[(k + 2) % 3]).c2;
    deviation = std::max({deviation,
                          std::abs(p.one_to_rest_c2(ij[0]) - p.one_to_rest_c2(ij[1])),
                          std::abs(p.one_to_rest_c2(kl[0]) - p.one_to_rest_c2(kl[1])),
                          std::abs(other_1 - other_2)});
  }
  if (!applicable) return {};
  return bounded(kFig3Tolerance, deviation);
}

SampleOutcome check_lu(const StateVector& state, const ConcurrenceProfile& p,
                       const CampaignConfig& cfg, std::size_t index) {
  SampleRng rng(derive_seed(cfg.ensemble.seed, index, kUnitaryStream));
  StateVector rotated = state;
  for (int q = 0; q < 4; ++q) rotated = apply_local_unitary(rotated, q, haar_unitary(rng));
  const GmeReport before = gme_report(p, tolerances_of(cfg));
  const GmeReport after = gme_report(profile(rotated), tolerances_of(cfg));
  return bounded(cfg.tolerance,
                 std::max(std::abs(after.f - before.f), std::abs(after.f1 - before.f1)));
}

SampleOutcome check_permutation(const StateVector& state, const ConcurrenceProfile& p,
                                const CampaignConfig& cfg) {
  const GmeReport base = gme_report(p, tolerances_of(cfg));
  std::array<int, 4> perm{0, 1, 2, 3};
  double deviation = 0.0;
  do {
    const GmeReport r = gme_report(profile(permute_qubits(state, perm)), tolerances_of(cfg));
    deviation = std::max({deviation, std::abs(r.f - base.f), std::abs(r.f1 - base.f1)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return bounded(kPermutationTolerance, deviation);
}

SampleOutcome check_saturation(const ConcurrenceProfile& p, const CampaignConfig& cfg) {
  bool applicable = false;
  bool failed = false;
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& diag : two_to_two_cuts()) {
    const ProfileEntry& d = p.at(diag);
    for (const auto& pair : {diag.side_a().qubits(), diag.side_b().qubits()}) {
      const double c_i = p.one_to_rest_c(pair[0]);
      const double c_j = p.one_to_rest_c(pair[1]);
      const bool zero_i = c_i < cfg.zero_threshold;
      const bool zero_j = c_j < cfg.zero_threshold;
      const bool zero_d = d.c < cfg.zero_threshold;
      if (zero_i && zero_j && zero_d) continue;
      applicable = true;
      if (zero_i || zero_j) {
        // The side adjacent to a vanishing one equals the diagonal.
        const double adjacent = zero_i ? p.one_to_rest_c2(pair[1]) : p.one_to_rest_c2(pair[0]);
        const double m = kFig3Tolerance - std::abs(adjacent - d.c2);
        margin = std::min(margin, m);
        failed |= m < 0.0;
      } else if (!zero_d) {
        const double x = p.one_to_rest_c2(pair[0]);
        const double y = p.one_to_rest_c2(pair[1]);
        const double m = std::min(x + y - d.c2, d.c2 - std::abs(x - y));
        margin = std::min(margin, m);
        failed |= m <= kStrictTolerance;
      }
    }
  }
  if (!applicable) return {};
  if (std::isinf(margin)) return {Verdict::kNotApplicable, 0.0};
  return {failed ? Verdict::kFail : Verdict::kPass, margin};
}

std::vector<SampleOutcome> evaluate_sample(const CampaignConfig& cfg, std::size_t index) {
  const StateVector state = sample_one(cfg.ensemble, index);
  const ConcurrenceProfile p = profile(state);
  std::vector<SampleOutcome> out;
  out.reserve(cfg.checks.size());
  for (Check c : cfg.checks) out.push_back(evaluate_check(c, state, p, cfg, index));
  return out;
}

struct Aggregator {
  CampaignResult result;

  explicit Aggregator(const CampaignConfig& cfg) {
    result.ensemble = cfg.ensemble;
    result.tolerance = cfg.tolerance;
    result.zero_threshold = cfg.zero_threshold;
    result.fail_fast = cfg.fail_fast;
    for (Check c : cfg.checks) {
      CheckResult r;
      r.check = c;
      result.checks.push_back(r);
    }
  }

  // Returns true when the sample failed any check.
  bool add(std::size_t index, const std::vector<SampleOutcome>& outcomes) {
    bool failed = false;
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
      CheckResult& r = result.checks[k];
      const SampleOutcome& o = outcomes[k];
      ++r.count;
      if (o.verdict == Verdict::kNotApplicable) {
        ++r.not_applicable;
        continue;
      }
      r.min_margin = r.min_margin ? std::min(*r.min_margin, o.margin) : o.margin;
      ++r.histogram[static_cast<std::size_t>(histogram_bin(o.margin))];
      if (o.verdict == Verdict::kPass) {
        ++r.passes;
      } else {
        ++r.failures;
        r.violations.push_back({index, o.margin});
        failed = true;
      }
    }
    ++result.samples_evaluated;
    return failed;
  }

  CampaignResult finish() && {
    result.pass = std::all_of(result.checks.begin(), result.checks.end(),
                              [](const CheckResult& r) { return r.failures == 0; });
    return std::move(result);
  }
};

[[noreturn]] void rethrow_for_sample(std::size_t index, const std::exception_ptr& error) {
  try {
    std::rethrow_exception(error);
  } catch (const Error& e) {
    throw Error(e.code(), "sample " + std::to_string(index) + ": " + e.what());
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kInvalidConfig, "sample " + std::to_string(index) + ": " + e.what());
  }
}

}  // namespace

std::string_view to_string(Check check) {
  switch (check) {
    case Check::kT1: return "t1";
    case Check::kT2Squared: return "t2sq";
    case Check::kT2Unsquared: return "t2c";
    case Check::kT3Strict: return "t3";
    case Check::kT4Sum: return "t4";
    case Check::kFig2Reduction: return "fig2";
    case Check::kFig3Collinear: return "fig3";
    case Check::kLuInvariance: return "lu";
    case Check::kPermutationInvariance: return "perm";
    case Check::kSaturation: return "saturation";
  }
  return "unknown";
}

Check check_from_string(std::string_view name) {
  for (Check c : kAllChecks) {
    if (to_string(c) == name) return c;
  }
  throw Error(ErrorCode::kInvalidConfig,
              "unknown check '" + std::string(name) +
                  "' (expected t1, t2sq, t2c, t3, t4, fig2, fig3, lu, perm, saturation)");
}

std::vector<Check> default_checks() {
  return {kAllChecks.begin(), kAllChecks.end() - 1};
}

void CampaignConfig::validate() const {
  if (ensemble.count < 1) throw Error(ErrorCode::kInvalidCount, "sample count must be at least 1");
  if (!(tolerance > 0.0)) throw Error(ErrorCode::kInvalidConfig, "tolerance must be positive");
  if (!(zero_threshold > tolerance)) {
    throw Error(ErrorCode::kInvalidConfig, "zero threshold must exceed the tolerance");
  }
  if (checks.empty()) throw Error(ErrorCode::kInvalidConfig, "no checks selected");
  const bool four_qubit = ensemble.kind != EnsembleKind::kHaar || ensemble.n_qubits == 4;
  if (!four_qubit) {
    throw Error(ErrorCode::kInvalidConfig, "campaign checks need a 4-qubit ensemble");
  }
}

int histogram_bin(double margin) {
  constexpr double kLow = -12.0;
  static const double kHigh = std::log10(4.0);
  if (!(margin > 1e-12)) return 0;
  if (margin >= 4.0) return kHistogramBins - 1;
  const double t = (std::log10(margin) - kLow) / (kHigh - kLow);
  return std::clamp(static_cast<int>(t * kHistogramBins), 0, kHistogramBins - 1);
}

SampleOutcome evaluate_check(Check check, const StateVector& state,
                             const ConcurrenceProfile& profile, const CampaignConfig& cfg,
                             std::size_t index) {
  switch (check) {
    case Check::kT1: return check_t1(profile, cfg);
    case Check::kT2Squared: return check_t2(profile, SideMode::kSquared, cfg);
    case Check::kT2Unsquared: return check_t2(profile, SideMode::kConcurrence, cfg);
    case Check::kT3Strict: return check_t3(profile, cfg);
    case Check::kT4Sum: return check_t4(profile, cfg);
    case Check::kFig2Reduction: return check_fig2(state, profile, cfg);
    case Check::kFig3Collinear: return check_fig3(profile, cfg);
    case Check::kLuInvariance: return check_lu(state, profile, cfg, index);
    case Check::kPermutationInvariance: return check_permutation(state, profile, cfg);
    case Check::kSaturation: return check_saturation(profile, cfg);
  }
  return {};
}

CampaignResult run_campaign(const CampaignConfig& cfg) {
  cfg.validate();
  Aggregator agg(cfg);
  const int workers = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
  const std::size_t total = cfg.ensemble.count;

  std::vector<std::vector<SampleOutcome>> outcomes;
  std::vector<std::exception_ptr> errors;
  for (std::size_t begin = 0; begin < total; begin += kBlockSize) {
    const std::size_t size = std::min(kBlockSize, total - begin);
    outcomes.assign(size, {});
    errors.assign(size, nullptr);
    const auto n = static_cast<std::ptrdiff_t>(size);
#pragma omp parallel for schedule(dynamic, 64) num_threads(workers)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      const auto slot = static_cast<std::size_t>(k);
      try {
        outcomes[slot] = evaluate_sample(cfg, begin + slot);
      } catch (...) {
        errors[slot] = std::current_exception();
      }
    }
    for (std::size_t slot = 0; slot < size; ++slot) {
      if (errors[slot]) rethrow_for_sample(begin + slot, errors[slot]);
      if (agg.add(begin + slot, outcomes[slot]) && cfg.fail_fast) {
        agg.result.stopped_early = true;
        return std::move(agg).finish();
      }
    }
  }
  return std::move(agg).finish();
}

CampaignResult saturation_probe(const CampaignConfig& cfg) {
  CampaignConfig probe = cfg;
  probe.checks = {Check::kSaturation};
  return run_campaign(probe);
}

namespace reference {

CampaignResult run_campaign_serial(const CampaignConfig& cfg) {
  cfg.validate();
  Aggregator agg(cfg);
  for (std::size_t index = 0; index < cfg.ensemble.count; ++index) {
    std::vector<SampleOutcome> outcomes;
    try {
      outcomes = evaluate_sample(cfg, index);
    } catch (...) {
      rethrow_for_sample(index, std::current_exception());
    }
    if (agg.add(index, outcomes) && cfg.fail_fast) {
      agg.result.stopped_early = true;
      break;
    }
  }
  return std::move(agg).finish();
}

}  // namespace reference

}  // namespace entanglemetry
