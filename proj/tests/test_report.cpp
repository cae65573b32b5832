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

#include <gtest/gtest.h>

#include <cmath>

#include "entanglemetry/catalog.hpp"
#include "entanglemetry/error.hpp"
#include "entanglemetry/svg.hpp"
#include "entanglemetry/verify.hpp"

namespace entanglemetry {
namespace {

ReportEnvelope envelope(Payload p) { return {std::string(kSchemaVersion), std::string(kToolVersion), std::move(p), "echo"}; }

ErrorCode code_of(std::string_view text) {
  try {
    deserialize(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::kLengthMismatch;
}

TEST(Report, GmeContainsValuesAndRoundTrips) {
  const auto env = envelope(gme_report(ghz_state(4)));
  const std::string text = serialize(env);
  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["payload_kind"], "gme");
  EXPECT_NEAR(j["payload"]["f"].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(deserialize(text), env);
  EXPECT_EQ(serialize(deserialize(text)), text);
}

TEST(Report, SerializationIsStable) {
  const auto env = envelope(profile(w_state(4)));
  EXPECT_EQ(serialize(env), serialize(env));
}

TEST(Report, AllPayloadKindsRoundTrip) {
  const auto p = profile(cluster4_state());
  GeometrySet quads;
  for (const auto& d : two_to_two_cuts()) {
    quads.push_back(build_quadrilateral(p, d, SideMode::kConcurrence));
  }
  CampaignConfig cfg;
  cfg.ensemble = EnsembleSpec::parse("haar4", 2, 50);
  const auto campaign = run_campaign(cfg);
  const FillReport fill{concurrence_fill(profile(w_state(3))), profile(w_state(3))};
  for (const Payload& payload : {Payload{p}, Payload{gme_report(p)}, Payload{quads},
                                 Payload{campaign}, Payload{fill}}) {
    const auto env = envelope(payload);
    EXPECT_EQ(deserialize(serialize(env)), env) << payload_kind(payload);
  }
}

TEST(Report, CampaignWithoutViolationsHasEmptyList) {
  CampaignConfig cfg;
  cfg.ensemble = EnsembleSpec::parse("haar4", 2, 20);
  const auto j = nlohmann::json::parse(serialize(envelope(run_campaign(cfg))));
  for (const auto& c : j["payload"]["checks"]) {
    EXPECT_TRUE(c["violations"].is_array());
    EXPECT_TRUE(c["violations"].empty());
  }
}

TEST(Report, Errors) {
  const std::string good = serialize(envelope(profile(ghz_state(4))));
  EXPECT_EQ(code_of(good.substr(0, good.size() / 2)), ErrorCode::kMalformedInput);
  auto j = nlohmann::json::parse(good);
  j["schema_version"] = "9.9";
  EXPECT_EQ(code_of(j.dump()), ErrorCode::kSchemaMismatch);
  j = nlohmann::json::parse(good);
  j["payload_kind"] = "banana";
  EXPECT_EQ(code_of(j.dump()), ErrorCode::kMalformedInput);
  j = nlohmann::json::parse(good);
  j["payload"].erase("cuts");
  EXPECT_NE(code_of(j.dump()), ErrorCode::kSchemaMismatch);
}

TEST(StateJson, RoundTrip) {
  const auto s = higuchi_sudbery_state();
  EXPECT_EQ(state_from_json(state_to_json(s)), s);
  EXPECT_EQ(state_from_json_text(state_to_json(s).dump()), s);
  EXPECT_THROW(state_from_json_text("{\"n_qubits\": 2, \"amplitudes\": [[1,0]]}"), Error);
}

TEST(Csv, QuotingAndRows) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  const std::string rows = profile_csv_rows("ghz4", profile(ghz_state(4)));
  EXPECT_EQ(std::count(rows.begin(), rows.end(), '\n'), 7);
  EXPECT_EQ(rows.rfind("ghz4,A|BCD,", 0), 0u);
  const std::string m = measures_csv_row("w4", gme_report(w_state(4)));
  EXPECT_EQ(m.rfind("w4,0.645497", 0), 0u);
}

TEST(Svg, RendersThreePanels) {
  const auto p = profile(ghz_state(4));
  GeometrySet quads;
  for (const auto& d : two_to_two_cuts()) quads.push_back(build_quadrilateral(p, d, SideMode::kSquared));
  const std::string svg = render_quadrilaterals_svg(quads, "ghz4");
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("AB|CD"), std::string::npos);
  EXPECT_NE(svg.find("AD|BC"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  const auto bell = profile(bell_pair_product_state());
  const auto flat = build_quadrilateral(bell, two_to_two_cuts()[0], SideMode::kSquared);
  EXPECT_NE(render_quadrilaterals_svg({&flat, 1}, "bell").find("degenerate"), std::string::npos);
}

}  // namespace
}  // namespace entanglemetry
