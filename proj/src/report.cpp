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

#include "entanglemetry/report.hpp"

#include <charconv>
#include <string>

#include "entanglemetry/error.hpp"

namespace entanglemetry {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedInput, what);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) malformed(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field '") + key + "'");
  return *it;
}

double number(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number()) malformed(std::string("field '") + key + "' is not a number");
  return v.get<double>();
}

std::string short_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

SideMode side_mode_from_string(const std::string& s) {
  if (s == "squared") return SideMode::kSquared;
  if (s == "concurrence") return SideMode::kConcurrence;
  malformed("unknown side mode '" + s + "'");
}

json cut_labels(const std::vector<Bipartition>& cuts) {
  json out = json::array();
  for (const auto& c : cuts) out.push_back(c.label());
  return out;
}

}  // namespace

std::string_view payload_kind(const Payload& payload) {
  switch (payload.index()) {
    case 0: return "profile";
    case 1: return "gme";
    case 2: return "geometry";
    case 3: return "campaign";
    default: return "fill";
  }
}

json to_json(const ConcurrenceProfile& profile) {
  json cuts = json::object();
  for (const auto& e : profile.entries()) {
    json entry{{"c", e.c}, {"c2", e.c2}};
    if (e.schmidt_weight) entry["y"] = *e.schmidt_weight;
    cuts[e.cut.label()] = std::move(entry);
  }
  return {{"n_qubits", profile.num_qubits()}, {"cuts", std::move(cuts)}};
}

ConcurrenceProfile profile_from_json(const json& j) {
  const int n = field(j, "n_qubits").get<int>();
  const json& cuts = field(j, "cuts");
  std::vector<ProfileEntry> entries;
  for (const auto& cut : enumerate_bipartitions(n)) {
    const json& e = field(cuts, cut.label().c_str());
    ProfileEntry pe{cut, number(e, "c"), number(e, "c2"), std::nullopt};
    if (e.contains("y")) pe.schmidt_weight = number(e, "y");
    entries.push_back(pe);
  }
  if (cuts.size() != entries.size()) malformed("profile has unexpected cuts");
  return ConcurrenceProfile(n, std::move(entries));
}

json to_json(const GmeReport& report) {
  json triangles = json::array();
  json degenerate = json::array();
  for (const auto& t : report.triangles) {
    triangles.push_back({{"diagonal", t.diagonal.label()},
                         {"half", t.half},
                         {"cuts", {t.cuts[0].label(), t.cuts[1].label(), t.cuts[2].label()}},
                         {"sides", {{"squared", t.sides_squared}, {"concurrence", t.sides_concurrence}}},
                         {"area_sq_mode", t.area_squared_mode},
                         {"area_c_mode", t.area_concurrence_mode},
                         {"degenerate", t.degenerate}});
    degenerate.push_back(t.degenerate);
  }
  return {{"f", report.f},
          {"f1", report.f1},
          {"normalization", report.normalization},
          {"triangles", std::move(triangles)},
          {"class",
           {{"kind", to_string(report.separability.kind)},
            {"cuts", cut_labels(report.separability.separable_cuts)}}},
          {"degenerate", std::move(degenerate)}};
}

GmeReport gme_from_json(const json& j) {
  GmeReport r;
  r.f = number(j, "f");
  r.f1 = number(j, "f1");
  r.normalization = number(j, "normalization");
  const json& triangles = field(j, "triangles");
  if (!triangles.is_array() || triangles.size() != 6) malformed("expected six triangles");
  for (std::size_t k = 0; k < 6; ++k) {
    const json& t = triangles[k];
    TriangleRecord& out = r.triangles[k];
    out.diagonal = Bipartition::parse(4, field(t, "diagonal").get<std::string>());
    out.half = field(t, "half").get<int>();
    const json& cuts = field(t, "cuts");
    if (!cuts.is_array() || cuts.size() != 3) malformed("triangle needs three cuts");
    for (std::size_t s = 0; s < 3; ++s) out.cuts[s] = Bipartition::parse(4, cuts[s].get<std::string>());
    const json& sides = field(t, "sides");
    out.sides_squared = field(sides, "squared").get<std::array<double, 3>>();
    out.sides_concurrence = field(sides, "concurrence").get<std::array<double, 3>>();
    out.area_squared_mode = number(t, "area_sq_mode");
    out.area_concurrence_mode = number(t, "area_c_mode");
    out.degenerate = field(t, "degenerate").get<bool>();
  }
  const json& cls = field(j, "class");
  r.separability.kind = separability_kind_from_string(field(cls, "kind").get<std::string>());
  for (const auto& c : field(cls, "cuts")) {
    r.separability.separable_cuts.push_back(Bipartition::parse(4, c.get<std::string>()));
  }
  return r;
}

json to_json(const QuadrilateralGeometry& g) {
  json sides = json::object();
  for (std::size_t s = 0; s < 4; ++s) sides[g.side_cuts[s].label()] = g.sides[s];
  json vertices = json::array();
  for (const auto& v : g.vertices) vertices.push_back({v.x, v.y});
  return {{"diagonal", g.diagonal_cut.label()},
          {"mode", to_string(g.mode)},
          {"sides", std::move(sides)},
          {"side_order", {g.side_cuts[0].label(), g.side_cuts[1].label(), g.side_cuts[2].label(),
                          g.side_cuts[3].label()}},
          {"diagonal_len", g.diagonal},
          {"areas", {g.area_1, g.area_2}},
          {"vertices", std::move(vertices)},
          {"degenerate", {g.degenerate[0], g.degenerate[1]}}};
}

QuadrilateralGeometry geometry_from_json(const json& j) {
  QuadrilateralGeometry g;
  g.diagonal_cut = Bipartition::parse(4, field(j, "diagonal").get<std::string>());
  g.mode = side_mode_from_string(field(j, "mode").get<std::string>());
  const json& order = field(j, "side_order");
  const json& sides = field(j, "sides");
  if (!order.is_array() || order.size() != 4) malformed("side_order needs four cuts");
  for (std::size_t s = 0; s < 4; ++s) {
    const std::string label = order[s].get<std::string>();
    g.side_cuts[s] = Bipartition::parse(4, label);
    g.sides[s] = number(sides, label.c_str());
  }
  g.diagonal = number(j, "diagonal_len");
  g.triangle_1 = {{g.sides[0], g.sides[1], g.diagonal}, {g.side_cuts[0], g.side_cuts[1], g.diagonal_cut}};
  g.triangle_2 = {{g.sides[2], g.sides[3], g.diagonal}, {g.side_cuts[2], g.side_cuts[3], g.diagonal_cut}};
  const auto areas = field(j, "areas").get<std::array<double, 2>>();
  g.area_1 = areas[0];
  g.area_2 = areas[1];
  g.degenerate = field(j, "degenerate").get<std::array<bool, 2>>();
  const json& vertices = field(j, "vertices");
  if (!vertices.is_array() || vertices.size() != 4) malformed("expected four vertices");
  for (std::size_t v = 0; v < 4; ++v) {
    const auto xy = vertices[v].get<std::array<double, 2>>();
    g.vertices[v] = {xy[0], xy[1]};
  }
  return g;
}

json to_json(const EnsembleSpec& spec) {
  return {{"kind", spec.name()}, {"seed", spec.seed}, {"count", spec.count}};
}

EnsembleSpec ensemble_from_json(const json& j) {
  return EnsembleSpec::parse(field(j, "kind").get<std::string>(),
                             field(j, "seed").get<std::uint64_t>(),
                             field(j, "count").get<std::size_t>());
}

json to_json(const CampaignResult& result) {
  json checks = json::array();
  for (const auto& c : result.checks) {
    json violations = json::array();
    for (const auto& v : c.violations) violations.push_back({{"index", v.index}, {"margin", v.margin}});
    checks.push_back({{"check", to_string(c.check)},
                      {"count", c.count},
                      {"passes", c.passes},
                      {"failures", c.failures},
                      {"not_applicable", c.not_applicable},
                      {"violations", std::move(violations)},
                      {"min_margin", c.min_margin ? json(*c.min_margin) : json(nullptr)},
                      {"histogram", c.histogram}});
  }
  return {{"ensemble", to_json(result.ensemble)},
          {"tolerance", result.tolerance},
          {"zero_threshold", result.zero_threshold},
          {"fail_fast", result.fail_fast},
          {"samples_evaluated", result.samples_evaluated},
          {"stopped_early", result.stopped_early},
          {"checks", std::move(checks)},
          {"pass", result.pass}};
}

CampaignResult campaign_from_json(const json& j) {
  CampaignResult r;
  r.ensemble = ensemble_from_json(field(j, "ensemble"));
  r.tolerance = number(j, "tolerance");
  r.zero_threshold = number(j, "zero_threshold");
  r.fail_fast = field(j, "fail_fast").get<bool>();
  r.samples_evaluated = field(j, "samples_evaluated").get<std::size_t>();
  r.stopped_early = field(j, "stopped_early").get<bool>();
  r.pass = field(j, "pass").get<bool>();
  for (const auto& c : field(j, "checks")) {
    CheckResult out;
    out.check = check_from_string(field(c, "check").get<std::string>());
    out.count = field(c, "count").get<std::size_t>();
    out.passes = field(c, "passes").get<std::size_t>();
    out.failures = field(c, "failures").get<std::size_t>();
    out.not_applicable = field(c, "not_applicable").get<std::size_t>();
    for (const auto& v : field(c, "violations")) {
      out.violations.push_back({field(v, "index").get<std::size_t>(), number(v, "margin")});
    }
    const json& m = field(c, "min_margin");
    if (!m.is_null()) out.min_margin = m.get<double>();
    out.histogram = field(c, "histogram").get<std::array<std::uint64_t, kHistogramBins>>();
    r.checks.push_back(std::move(out));
  }
  return r;
}

json to_json(const FillReport& report) {
  return {{"fill", report.fill}, {"profile", to_json(report.profile)}};
}

FillReport fill_from_json(const json& j) {
  return {number(j, "fill"), profile_from_json(field(j, "profile"))};
}

std::string serialize(const ReportEnvelope& envelope) {
  json payload = std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GeometrySet>) {
          json arr = json::array();
          for (const auto& g : p) arr.push_back(to_json(g));
          return arr;
        } else {
          return to_json(p);
        }
      },
      envelope.payload);
  const json j{{"schema_version", envelope.schema_version},
               {"tool_version", envelope.tool_version},
               {"payload_kind", payload_kind(envelope.payload)},
               {"payload", std::move(payload)},
               {"inputs_echo", envelope.inputs_echo}};
  return j.dump(2) + "\n";
}

ReportEnvelope deserialize(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  try {
    ReportEnvelope env;
    env.schema_version = field(j, "schema_version").get<std::string>();
    if (env.schema_version != kSchemaVersion) {
      throw Error(ErrorCode::kSchemaMismatch,
                  "unsupported schema_version '" + env.schema_version + "'");
    }
    env.tool_version = field(j, "tool_version").get<std::string>();
    env.inputs_echo = field(j, "inputs_echo").get<std::string>();
    const std::string kind = field(j, "payload_kind").get<std::string>();
    const json& p = field(j, "payload");
    if (kind == "profile") {
      env.payload = profile_from_json(p);
    } else if (kind == "gme") {
      env.payload = gme_from_json(p);
    } else if (kind == "geometry") {
      GeometrySet set;
      for (const auto& g : p) set.push_back(geometry_from_json(g));
      env.payload = std::move(set);
    } else if (kind == "campaign") {
      env.payload = campaign_from_json(p);
    } else if (kind == "fill") {
      env.payload = fill_from_json(p);
    } else {
      malformed("unknown payload_kind '" + kind + "'");
    }
    return env;
  } catch (const json::exception& e) {
    malformed(std::string("bad field type: ") + e.what());
  }
}

json state_to_json(const StateVector& state) {
  json amps = json::array();
  for (const auto& a : state.amplitudes()) amps.push_back({a.real(), a.imag()});
  return {{"n_qubits", state.num_qubits()}, {"amplitudes", std::move(amps)}};
}

StateVector state_from_json(const json& j, NormPolicy policy) {
  try {
    const int n = field(j, "n_qubits").get<int>();
    std::vector<Complex> amps;
    for (const auto& pair : field(j, "amplitudes")) {
      const auto re_im = pair.get<std::array<double, 2>>();
      amps.emplace_back(re_im[0], re_im[1]);
    }
    return StateVector::from_amplitudes(n, std::move(amps), policy);
  } catch (const json::exception& e) {
    malformed(std::string("bad state file: ") + e.what());
  }
}

StateVector state_from_json_text(std::string_view text, NormPolicy policy) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  return state_from_json(j, policy);
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string profile_csv_rows(std::string_view state_label, const ConcurrenceProfile& profile) {
  std::string out;
  const std::string label = csv_field(state_label);
  for (const auto& e : profile.entries()) {
    out += label + "," + e.cut.label() + "," + short_double(e.c) + "," + short_double(e.c2) + "\n";
  }
  return out;
}

std::string measures_csv_row(std::string_view state_label, const GmeReport& report) {
  return csv_field(state_label) + "," + short_double(report.f) + "," + short_double(report.f1) + "\n";
}

}  // namespace entanglemetry
