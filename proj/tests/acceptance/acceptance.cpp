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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "entanglemetry/catalog.hpp"
#include "entanglemetry/cli.hpp"
#include "entanglemetry/kets.hpp"
#include "entanglemetry/measures.hpp"
#include "entanglemetry/report.hpp"
#include "entanglemetry/verify.hpp"
#include "oracle.hpp"

namespace em = entanglemetry;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string cli_out(std::vector<std::string> args, int* code = nullptr) {
  args.insert(args.begin(), "entanglemetry");
  std::ostringstream out, err;
  const int rc = em::run_cli(args, out, err);
  if (code) *code = rc;
  return out.str();
}

em::CampaignConfig campaign(std::string_view ensemble, std::size_t count, std::uint64_t seed,
                            std::vector<em::Check> checks) {
  em::CampaignConfig cfg;
  cfg.ensemble = em::EnsembleSpec::parse(ensemble, seed, count);
  cfg.checks = std::move(checks);
  cfg.threads = 1;
  return cfg;
}

void require_clean(Outcome& o, const em::CampaignResult& r, std::size_t expect_applicable) {
  for (const auto& c : r.checks) {
    const std::string name(em::to_string(c.check));
    o.require(c.failures == 0, name + fmt(" failures=%.0f", static_cast<double>(c.failures)));
    if (expect_applicable > 0) {
      o.require(c.passes == expect_applicable,
                name + fmt(" passes=%.0f", static_cast<double>(c.passes)));
    }
  }
}

struct TableTarget {
  const char* name;
  double f;
  double f1;
};

constexpr TableTarget kTable[] = {
    {"w4", 0.646, 0.817}, {"ghz4", 1.000, 1.000}, {"cluster4", 1.095, 1.077}, {"hs", 1.148, 1.089}};

Outcome table_reproduction() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto j = nlohmann::json::parse(cli_out({"table", "--format", "json"}));
  const double elapsed = seconds_since(t0);
  for (const auto& target : kTable) {
    for (const auto& row : j["rows"]) {
      if (row["state"] != target.name) continue;
      const double f = row["f"].get<double>();
      const double f1 = row["f1"].get<double>();
      o.require(std::abs(f - target.f) <= 5e-4,
                std::string(target.name) + fmt(" F=%.7f vs %.3f", f, target.f));
      o.require(std::abs(f1 - target.f1) <= 5e-4,
                std::string(target.name) + fmt(" F1=%.7f vs %.3f", f1, target.f1));
    }
  }
  o.require(elapsed < 1.0, fmt("runtime %.3fs", elapsed));
  if (o.pass) o.detail = fmt("runtime %.3fs", elapsed);
  return o;
}

Outcome closed_forms() {
  Outcome o;
  struct Case {
    const char* state;
    em::StateVector psi;
    const char* cut;
    double c2;
  };
  const std::vector<Case> cases = {
      {"w4", em::w_state(4), "A|BCD", 0.75},        {"w4", em::w_state(4), "B|ACD", 0.75},
      {"w4", em::w_state(4), "C|ABD", 0.75},        {"w4", em::w_state(4), "D|ABC", 0.75},
      {"w4", em::w_state(4), "AB|CD", 1.0},         {"w4", em::w_state(4), "AC|BD", 1.0},
      {"w4", em::w_state(4), "AD|BC", 1.0},         {"hs", em::higuchi_sudbery_state(), "AB|CD", 4.0 / 3.0},
      {"hs", em::higuchi_sudbery_state(), "AC|BD", 4.0 / 3.0},
      {"hs", em::higuchi_sudbery_state(), "AD|BC", 4.0 / 3.0},
      {"cluster4", em::cluster4_state(), "AB|CD", 1.0},
      {"cluster4", em::cluster4_state(), "AC|BD", 1.5},
      {"cluster4", em::cluster4_state(), "AD|BC", 1.5},
  };
  for (const auto& c : cases) {
    const auto cut = em::Bipartition::parse(4, c.cut);
    const double lib = em::profile(c.psi).at(cut).c2;
    const double oracle = em::oracle::c2(c.psi, cut.side_a().qubits());
    const std::string tag = std::string(c.state) + " " + c.cut;
    o.require(std::abs(lib - c.c2) <= 1e-9, tag + fmt(" library %.12f vs %.12f", lib, c.c2));
    o.require(std::abs(oracle - c.c2) <= 1e-9, tag + fmt(" oracle %.12f vs %.12f", oracle, c.c2));
  }
  if (o.pass) o.detail = fmt("%.0f cuts", static_cast<double>(cases.size()));
  return o;
}

Outcome theorem_campaign() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = em::run_campaign(campaign("haar4", 100000, 7,
                                           {em::Check::kT1, em::Check::kT2Squared,
                                            em::Check::kT2Unsquared, em::Check::kT3Strict,
                                            em::Check::kT4Sum}));
  const double elapsed = seconds_since(t0);
  require_clean(o, r, 100000);
  o.require(r.samples_evaluated == 100000, "sample count");
  o.require(elapsed < 120.0, fmt("runtime %.1fs", elapsed));
  if (o.pass) o.detail = fmt("1e5 samples, 1 thread, %.1fs", elapsed);
  return o;
}

Outcome degeneracy_suites() {
  Outcome o;
  const auto one_three = em::sample(em::EnsembleSpec::parse("product13", 7, 10000), 1);
  double worst = 0.0;
  for (const auto& s : one_three) {
    const auto g = em::gme_report(s);
    worst = std::max({worst, std::abs(g.f), std::abs(g.f1)});
  }
  o.require(worst < 1e-9, fmt("one-to-three max F/F1 %.3g", worst));
  require_clean(o, em::run_campaign(campaign("product13", 10000, 7, {em::Check::kFig2Reduction})),
                10000);
  require_clean(o, em::run_campaign(campaign("product22", 10000, 7, {em::Check::kFig3Collinear})),
                10000);
  if (o.pass) o.detail = "1e4 one-to-three + 1e4 two-to-two";
  return o;
}

Outcome invariance_suites() {
  Outcome o;
  require_clean(o, em::run_campaign(campaign("haar4", 1000, 7, {em::Check::kLuInvariance})), 1000);
  require_clean(o,
                em::run_campaign(campaign("haar4", 100, 8, {em::Check::kPermutationInvariance})),
                100);
  if (o.pass) o.detail = "1e3 LU pairs, 24 x 100 permutations";
  return o;
}

Outcome normalization() {
  Outcome o;
  const auto ghz4 = em::gme_report(em::ghz_state(4));
  const double fill = em::concurrence_fill_3q(em::ghz_state(3));
  o.require(std::abs(ghz4.f - 1.0) <= 1e-12, fmt("F(GHZ4)=%.17g", ghz4.f));
  o.require(std::abs(ghz4.f1 - 1.0) <= 1e-12, fmt("F1(GHZ4)=%.17g", ghz4.f1));
  o.require(std::abs(fill - 1.0) <= 1e-12, fmt("fill(GHZ3)=%.17g", fill));
  return o;
}

Outcome parser() {
  Outcome o;
  const auto states = em::sample(em::EnsembleSpec::parse("haar4", 7, 1000), 1);
  double worst = 0.0;
  for (const auto& s : states) {
    const auto back = em::parse_ket(em::print_ket(s, 0.0));
    worst = std::max(worst, std::abs(1.0 - em::oracle::overlap_abs(s, back)));
  }
  o.require(worst <= 1e-9, fmt("round trip worst |1-|<s|s'>|| %.3g", worst));

  struct Literal {
    const char* text;
    const char* name;
  };
  const Literal literals[] = {
      {"1/sqrt(2)(|0000> + |1111>)", "ghz4"},
      {"(|0001> + |0010> + |0100> + |1000>)", "w4"},
      {"1/sqrt(6)[|0011> + |1100> + w(|0101> + |1010>) + w^2(|0110> + |1001>)]", "hs"},
  };
  for (const auto& lit : literals) {
    const auto parsed = em::gme_report(em::parse_ket(lit.text));
    const auto named = em::gme_report(em::build_named(lit.name));
    o.require(std::abs(parsed.f - named.f) <= 1e-12 && std::abs(parsed.f1 - named.f1) <= 1e-12,
              std::string(lit.name) + fmt(" literal F=%.12f F1=%.12f", parsed.f, parsed.f1));
  }
  if (o.pass) o.detail = fmt("worst round-trip deviation %.3g", worst);
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> base = {"verify", "--samples", "20000", "--seed", "7"};
  std::string reference;
  for (const char* threads : {"1", "2", "4", "8"}) {
    auto args = base;
    args.push_back("--threads");
    args.push_back(threads);
    int code = -1;
    const std::string out = cli_out(args, &code);
    o.require(code == em::kExitOk, std::string("exit code with --threads ") + threads);
    if (reference.empty()) {
      reference = out;
    } else {
      o.require(out == reference, std::string("bytes differ with --threads ") + threads);
    }
  }
  o.require(cli_out(base) == reference, "bytes differ with default threads");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"1 table reproduction", table_reproduction},
      {"2 closed-form concurrences", closed_forms},
      {"3 theorem campaign", theorem_campaign},
      {"4 degeneracy suites", degeneracy_suites},
      {"5 invariance suites", invariance_suites},
      {"6 normalization", normalization},
      {"7 ket parser", parser},
      {"8 determinism across threads", determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s  %s%s%s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.empty() ? "" : "  ",
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
