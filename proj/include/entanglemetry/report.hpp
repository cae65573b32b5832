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

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "entanglemetry/bipartition.hpp"
#include "entanglemetry/geometry.hpp"
#include "entanglemetry/measures.hpp"
#include "entanglemetry/verify.hpp"

namespace entanglemetry {

inline constexpr std::string_view kSchemaVersion = "1.0";
#ifdef ENTANGLEMETRY_VERSION
inline constexpr std::string_view kToolVersion = ENTANGLEMETRY_VERSION;
#else
inline constexpr std::string_view kToolVersion = "0.0.0";
#endif

// 3-qubit analysis result.
struct FillReport {
  double fill = 0.0;
  ConcurrenceProfile profile;
  friend bool operator==(const FillReport&, const FillReport&) = default;
};

using GeometrySet = std::vector<QuadrilateralGeometry>;
using Payload = std::variant<ConcurrenceProfile, GmeReport, GeometrySet, CampaignResult, FillReport>;

struct ReportEnvelope {
  std::string schema_version{kSchemaVersion};
  std::string tool_version{kToolVersion};
  Payload payload;
  std::string inputs_echo;

  friend bool operator==(const ReportEnvelope&, const ReportEnvelope&) = default;
};

// "profile", "gme", "geometry", "campaign" or "fill".
std::string_view payload_kind(const Payload& payload);

// Sorted keys, shortest round-trip doubles, 2-space indent, trailing newline.
std::string serialize(const ReportEnvelope& envelope);
// SchemaMismatch for an unsupported schema_version; MalformedInput otherwise.
ReportEnvelope deserialize(std::string_view bytes);

nlohmann::json to_json(const ConcurrenceProfile& profile);
nlohmann::json to_json(const GmeReport& report);
nlohmann::json to_json(const QuadrilateralGeometry& geometry);
nlohmann::json to_json(const CampaignResult& result);
nlohmann::json to_json(const FillReport& report);
nlohmann::json to_json(const EnsembleSpec& spec);

ConcurrenceProfile profile_from_json(const nlohmann::json& j);
GmeReport gme_from_json(const nlohmann::json& j);
QuadrilateralGeometry geometry_from_json(const nlohmann::json& j);
CampaignResult campaign_from_json(const nlohmann::json& j);
FillReport fill_from_json(const nlohmann::json& j);
EnsembleSpec ensemble_from_json(const nlohmann::json& j);

// State file: {"n_qubits": n, "amplitudes": [[re, im], ...]} in basis order.
nlohmann::json state_to_json(const StateVector& state);
StateVector state_from_json(const nlohmann::json& j, NormPolicy policy = NormPolicy::kRenormalize);
StateVector state_from_json_text(std::string_view text, NormPolicy policy = NormPolicy::kRenormalize);

// CSV: "state,cut,c,c2" rows for profiles and "state,f,f1" rows for measures.
std::string csv_field(std::string_view text);
std::string profile_csv_rows(std::string_view state_label, const ConcurrenceProfile& profile);
std::string measures_csv_row(std::string_view state_label, const GmeReport& report);

}  // namespace entanglemetry
