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

#include "entanglemetry/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "entanglemetry/catalog.hpp"
#include "entanglemetry/error.hpp"
#include "entanglemetry/kets.hpp"
#include "entanglemetry/measures.hpp"
#include "entanglemetry/report.hpp"
#include "entanglemetry/svg.hpp"
#include "entanglemetry/verify.hpp"

namespace entanglemetry {

namespace {

struct InputOptions {
  std::string ket;
  std::string file;
  std::string named;
  std::string family;
  bool strict = false;
};

struct ResolvedInput {
  StateVector state;
  std::string label;
};

void add_input_options(CLI::App& cmd, InputOptions& in) {
  cmd.add_option("--state", in.ket, "Ket expression, e.g. \"1/sqrt(2)(|0000>+|1111>)\"");
  cmd.add_option("--state-file", in.file, "JSON state file {n_qubits, amplitudes}");
  cmd.add_option("--named", in.named, "ghz3, ghz4, w3, w4, cluster4, hs, bellxbell");
  cmd.add_option("--family", in.family, "gabcd:a,b,c,d or lab3:a,b with complex literals");
  cmd.add_flag("--strict", in.strict, "Reject inputs whose norm is off by 1e-6 or more");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kMalformedInput, "cannot read " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

ResolvedInput resolve(const InputOptions& in) {
  const int sources = !in.ket.empty() + !in.file.empty() + !in.named.empty() + !in.family.empty();
  if (sources != 1) {
    throw Error(ErrorCode::kInvalidConfig,
                "give exactly one of --state, --state-file, --named, --family");
  }
  const NormPolicy policy = in.strict ? NormPolicy::kStrict : NormPolicy::kRenormalize;
  if (!in.ket.empty()) return {parse_ket(in.ket, policy), in.ket};
  if (!in.file.empty()) return {state_from_json_text(read_file(in.file), policy), in.file};
  if (!in.named.empty()) return {build_named(in.named), in.named};
  return {build_family(FamilyParams::parse(in.family)), in.family};
}

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("ENTANGLEMETRY_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;
}

// Half-even rounding to three decimals for display.
std::string three_decimals(double v) {
  const double rounded = std::nearbyint(v * 1000.0) / 1000.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", rounded);
  return buf;
}

std::string full_precision(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kMalformedInput, "cannot open " + path + " for writing");
  f << text;
  if (!f) throw Error(ErrorCode::kMalformedInput, "failed writing " + path);
}

std::string profile_text(const ConcurrenceProfile& p) {
  std::string out = "cuts:\n";
  for (const auto& e : p.entries()) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "  %-6s c = %.12f  c2 = %.12f\n", e.cut.label().c_str(), e.c, e.c2);
    out += buf;
  }
  return out;
}

int cmd_analyze(const InputOptions& in, const std::string& measure, const std::string& format,
                bool with_profile, std::ostream& out) {
  const ResolvedInput input = resolve(in);
  const int n = input.state.num_qubits();
  if (n != 3 && n != 4) {
    throw Error(ErrorCode::kUnsupportedSize, "analyze needs a 3- or 4-qubit state");
  }
  const ConcurrenceProfile p = profile(input.state);
  const std::string echo = print_ket(input.state, 0.0);

  if (n == 3) {
    const FillReport fill{concurrence_fill(p), p};
    if (format == "json") {
      out << serialize({std::string(kSchemaVersion), std::string(kToolVersion), fill, echo});
    } else if (format == "csv") {
      out << "state,fill\n" << csv_field(input.label) << "," << full_precision(fill.fill) << "\n";
      if (with_profile) out << "state,cut,c,c2\n" << profile_csv_rows(input.label, p);
    } else {
      out << "state: " << input.label << "\nfill = " << full_precision(fill.fill) << "\n"
          << profile_text(p);
    }
    return kExitOk;
  }

  const GmeReport report = gme_report(p);
  if (format == "json") {
    out << serialize({std::string(kSchemaVersion), std::string(kToolVersion), report, echo});
  } else if (format == "csv") {
    out << "state,f,f1\n" << measures_csv_row(input.label, report);
    if (with_profile) out << "state,cut,c,c2\n" << profile_csv_rows(input.label, p);
  } else {
    out << "state: " << input.label << "\n";
    if (measure != "f1") out << "F  = " << full_precision(report.f) << "\n";
    if (measure != "f") out << "F1 = " << full_precision(report.f1) << "\n";
    out << "class: " << to_string(report.separability.kind);
    for (const auto& c : report.separability.separable_cuts) out << " " << c.label();
    out << "\n" << profile_text(p);
  }
  return kExitOk;
}

struct TableRow {
  const char* display;
  const char* name;
};

constexpr TableRow kTableRows[] = {
    {"W4", "w4"}, {"GHZ4", "ghz4"}, {"Cluster4", "cluster4"}, {"HS", "hs"}};

int cmd_table(const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : kTableRows) {
      const GmeReport r = gme_report(build_named(row.name));
      rows.push_back({{"state", row.name}, {"f", r.f}, {"f1", r.f1}});
    }
    const nlohmann::json j{{"schema_version", kSchemaVersion},
                           {"tool_version", kToolVersion},
                           {"rows", std::move(rows)}};
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "state,f,f1\n";
    for (const auto& row : kTableRows) out << measures_csv_row(row.name, gme_report(build_named(row.name)));
  } else {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%-10s %-7s %-7s\n", "state", "F", "F1");
    out << buf;
    for (const auto& row : kTableRows) {
      const GmeReport r = gme_report(build_named(row.name));
      std::snprintf(buf, sizeof buf, "%-10s %-7s %-7s\n", row.display, three_decimals(r.f).c_str(),
                    three_decimals(r.f1).c_str());
      out << buf;
    }
  }
  return kExitOk;
}

std::vector<Check> parse_checks(const std::string& list) {
  if (list.empty() || list == "all") return default_checks();
  std::vector<Check> checks;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "t2") {
      checks.push_back(Check::kT2Squared);
      checks.push_back(Check::kT2Unsquared);
    } else if (!item.empty()) {
      checks.push_back(check_from_string(item));
    }
  }
  return checks;
}

std::string ensemble_echo(const EnsembleSpec& spec) {
  return spec.name() + " seed=" + std::to_string(spec.seed) + " count=" + std::to_string(spec.count);
}

struct VerifyOptions {
  std::string ensemble = "haar4";
  long long samples = 10000;
  std::uint64_t seed = 7;
  double tolerance = 1e-9;
  double zero_threshold = kZeroThreshold;
  std::string checks = "all";
  bool fail_fast = false;
  int threads = 0;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  if (o.samples < 1) throw Error(ErrorCode::kInvalidCount, "--samples must be at least 1");
  CampaignConfig cfg;
  cfg.ensemble = EnsembleSpec::parse(o.ensemble, o.seed, static_cast<std::size_t>(o.samples));
  cfg.checks = parse_checks(o.checks);
  cfg.tolerance = o.tolerance;
  cfg.zero_threshold = o.zero_threshold;
  cfg.fail_fast = o.fail_fast;
  cfg.threads = resolve_threads(o.threads);
  const bool saturation_only = cfg.checks.size() == 1 && cfg.checks[0] == Check::kSaturation;
  const CampaignResult result = saturation_only ? saturation_probe(cfg) : run_campaign(cfg);
  out << serialize({std::string(kSchemaVersion), std::string(kToolVersion), result,
                    ensemble_echo(cfg.ensemble)});
  return result.pass ? kExitOk : kExitViolations;
}

int cmd_sample(const VerifyOptions& o, const std::string& path, std::ostream& out) {
  if (o.samples < 1) throw Error(ErrorCode::kInvalidCount, "--samples must be at least 1");
  const EnsembleSpec spec = EnsembleSpec::parse(o.ensemble, o.seed, static_cast<std::size_t>(o.samples));
  nlohmann::json states = nlohmann::json::array();
  for (const auto& s : sample(spec, resolve_threads(o.threads))) states.push_back(state_to_json(s));
  const nlohmann::json j{{"schema_version", kSchemaVersion},
                         {"ensemble", to_json(spec)},
                         {"states", std::move(states)}};
  write_output(j.dump(2) + "\n", path, out);
  return kExitOk;
}

int cmd_export_geometry(const InputOptions& in, const std::string& mode, const std::string& format,
                        const std::string& path, std::ostream& out) {
  const ResolvedInput input = resolve(in);
  if (input.state.num_qubits() != 4) {
    throw Error(ErrorCode::kUnsupportedSize, "export-geometry needs a 4-qubit state");
  }
  const SideMode side_mode = mode == "concurrence" ? SideMode::kConcurrence : SideMode::kSquared;
  const ConcurrenceProfile p = profile(input.state);
  GeometrySet quads;
  for (const auto& diag : two_to_two_cuts()) quads.push_back(build_quadrilateral(p, diag, side_mode));

  std::string text;
  if (format == "svg") {
    text = render_quadrilaterals_svg(quads, input.label + " (" + std::string(to_string(side_mode)) + ")");
  } else {
    text = serialize({std::string(kSchemaVersion), std::string(kToolVersion), quads,
                      print_ket(input.state, 0.0)});
  }
  write_output(text, path, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric genuine multipartite entanglement of four-qubit pure states"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  InputOptions analyze_in;
  std::string measure = "both";
  std::string analyze_format = "text";
  bool with_profile = false;
  auto* analyze = app.add_subcommand("analyze", "Concurrence profile and F / F1 of one state");
  add_input_options(*analyze, analyze_in);
  analyze->add_option("--measure", measure, "f, f1 or both")
      ->check(CLI::IsMember({"f", "f1", "both"}));
  analyze->add_option("--format", analyze_format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  analyze->add_flag("--profile", with_profile, "Append the per-cut CSV rows");

  std::string table_format = "text";
  auto* table = app.add_subcommand("table", "F and F1 of W4, GHZ4, Cluster4 and HS");
  table->add_option("--format", table_format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Run inequality and invariance checks over an ensemble");
  verify->add_option("--ensemble", verify_opts.ensemble,
                     "haar<N>, product13, product22, fullyproduct, family");
  verify->add_option("--samples", verify_opts.samples, "Number of samples");
  verify->add_option("--seed", verify_opts.seed, "Master seed");
  verify->add_option("--tolerance", verify_opts.tolerance, "Inequality tolerance");
  verify->add_option("--zero-threshold", verify_opts.zero_threshold,
                     "Concurrence below which a cut is separable");
  verify->add_option("--checks", verify_opts.checks,
                     "Comma list of t1,t2sq,t2c,t2,t3,t4,fig2,fig3,lu,perm,saturation or all");
  verify->add_flag("--fail-fast", verify_opts.fail_fast, "Stop at the first violating sample");
  verify->add_option("--threads", verify_opts.threads, "Worker cap (ENTANGLEMETRY_THREADS)");

  VerifyOptions sample_opts;
  sample_opts.samples = 10;
  std::string sample_out;
  auto* sample_cmd = app.add_subcommand("sample", "Write ensemble states as JSON");
  sample_cmd->add_option("--ensemble", sample_opts.ensemble, "haar<N>, product13, product22, fullyproduct, family");
  sample_cmd->add_option("--samples", sample_opts.samples, "Number of samples");
  sample_cmd->add_option("--seed", sample_opts.seed, "Master seed");
  sample_cmd->add_option("--threads", sample_opts.threads, "Worker cap (ENTANGLEMETRY_THREADS)");
  sample_cmd->add_option("--out", sample_out, "Output path (stdout when omitted)");

  InputOptions geometry_in;
  std::string geometry_mode = "squared";
  std::string geometry_format = "json";
  std::string geometry_out;
  auto* geometry = app.add_subcommand("export-geometry", "Export the three concurrence quadrilaterals");
  add_input_options(*geometry, geometry_in);
  geometry->add_option("--mode", geometry_mode, "squared or concurrence")
      ->check(CLI::IsMember({"squared", "concurrence"}));
  geometry->add_option("--format", geometry_format, "json or svg")
      ->check(CLI::IsMember({"json", "svg"}));
  geometry->add_option("--out", geometry_out, "Output path (stdout when omitted)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_in, measure, analyze_format, with_profile, out);
    if (*table) return cmd_table(table_format, out);
    if (*verify) return cmd_verify(verify_opts, out);
    if (*sample_cmd) return cmd_sample(sample_opts, sample_out, out);
    if (*geometry) {
      return cmd_export_geometry(geometry_in, geometry_mode, geometry_format, geometry_out, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace entanglemetry
