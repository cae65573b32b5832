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

#include "entanglemetry/bipartition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entanglemetry/error.hpp"

namespace entanglemetry {

namespace {

constexpr double kClampSlack = 1e-12;

}  // namespace

char party_letter(int qubit) { return static_cast<char>('A' + qubit); }

std::string party_string(QubitSubset subset) {
  std::string out;
  for (int q : subset.qubits()) out.push_back(party_letter(q));
  return out;
}

Bipartition Bipartition::canonical(int n_qubits, QubitSubset side) {
  if (n_qubits < 2 || n_qubits > kMaxQubits) {
    throw Error(ErrorCode::kUnsupportedSize,
                "bipartitions need 2 to " + std::to_string(kMaxQubits) + " qubits");
  }
  const std::uint32_t full = (1u << n_qubits) - 1u;
  if (side.empty() || (side.mask() & ~full) != 0) {
    throw Error(ErrorCode::kEmptySubset, "cut side is empty or out of range");
  }
  if (side.mask() == full) throw Error(ErrorCode::kFullSubset, "cut side is the full register");
  if (!side.contains(0)) side = side.complement(n_qubits);
  return Bipartition(n_qubits, side);
}

QubitSubset Bipartition::minor_side() const {
  const QubitSubset b = side_b();
  return b.size() < side_a_.size() ? b : side_a_;
}

CutKind Bipartition::kind() const {
  const int small = minor_side().size();
  if (small == 1) return CutKind::kOneToRest;
  if (small == 2 && n_qubits_ == 4) return CutKind::kTwoToTwo;
  return CutKind::kOther;
}

std::string Bipartition::label() const {
  const QubitSubset first = minor_side();
  return party_string(first) + "|" + party_string(first.complement(n_qubits_));
}

Bipartition Bipartition::parse(int n_qubits, std::string_view label) {
  const auto bar = label.find('|');
  if (bar == std::string_view::npos) {
    throw Error(ErrorCode::kMalformedInput, "cut label lacks '|': " + std::string(label));
  }
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i == bar) continue;
    const char ch = label[i];
    const int q = ch - 'A';
    if (q < 0 || q >= n_qubits) {
      throw Error(ErrorCode::kMalformedInput, "bad party letter in cut label: " + std::string(label));
    }
    std::uint32_t& side = i < bar ? left : right;
    if (((left | right) >> q) & 1u) {
      throw Error(ErrorCode::kMalformedInput, "repeated party in cut label: " + std::string(label));
    }
    side |= 1u << q;
  }
  if ((left | right) != (1u << n_qubits) - 1u) {
    throw Error(ErrorCode::kMalformedInput, "cut label does not cover the register: " + std::string(label));
  }
  return canonical(n_qubits, QubitSubset(left));
}

int Bipartition::lone_party() const {
  if (kind() != CutKind::kOneToRest) {
    throw Error(ErrorCode::kDomainError, "cut " + label() + " is not one-to-rest");
  }
  return minor_side().qubits().front();
}

std::vector<Bipartition> enumerate_bipartitions(int n_qubits) {
  if (n_qubits < 2 || n_qubits > kMaxQubits) {
    throw Error(ErrorCode::kUnsupportedSize,
                "cannot enumerate bipartitions of " + std::to_string(n_qubits) + " qubits");
  }
  std::vector<Bipartition> cuts;
  const std::uint32_t full = (1u << n_qubits) - 1u;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (mask & 1u) cuts.push_back(Bipartition::canonical(n_qubits, QubitSubset(mask)));
  }
  std::sort(cuts.begin(), cuts.end(), [](const Bipartition& x, const Bipartition& y) {
    const int sx = x.minor_side().size();
    const int sy = y.minor_side().size();
    if (sx != sy) return sx < sy;
    return x.label() < y.label();
  });
  return cuts;
}

double squared_concurrence(const StateVector& state, const Bipartition& cut) {
  if (cut.num_qubits() != state.num_qubits()) {
    throw Error(ErrorCode::kUnsupportedSize, "cut and state have different qubit counts");
  }
  return 2.0 * reduced_linear_entropy(state, cut.side_a());
}

double concurrence(const StateVector& state, const Bipartition& cut) {
  return std::sqrt(squared_concurrence(state, cut));
}

double schmidt_weight_from_squared(double c2) {
  if (c2 < -kClampSlack || c2 > 1.0 + kClampSlack || std::isnan(c2)) {
    throw Error(ErrorCode::kDomainError,
                "squared concurrence " + std::to_string(c2) + " outside [0, 1]");
  }
  c2 = std::clamp(c2, 0.0, 1.0);
  return 1.0 - std::sqrt(1.0 - c2);
}

double squared_from_schmidt_weight(double y) {
  if (y < -kClampSlack || y > 1.0 + kClampSlack || std::isnan(y)) {
    throw Error(ErrorCode::kDomainError,
                "Schmidt weight " + std::to_string(y) + " outside [0, 1]");
  }
  y = std::clamp(y, 0.0, 1.0);
  return y * (2.0 - y);
}

ConcurrenceProfile::ConcurrenceProfile(int n_qubits, std::vector<ProfileEntry> entries)
    : n_qubits_(n_qubits), entries_(std::move(entries)) {}

const ProfileEntry& ConcurrenceProfile::at(const Bipartition& cut) const {
  for (const auto& e : entries_) {
    if (e.cut == cut) return e;
  }
  throw Error(ErrorCode::kDomainError, "cut " + cut.label() + " not in profile");
}

const ProfileEntry& ConcurrenceProfile::at(std::string_view label) const {
  return at(Bipartition::parse(n_qubits_, label));
}

double ConcurrenceProfile::one_to_rest_c2(int party) const {
  return at(Bipartition::canonical(n_qubits_, QubitSubset(1u << party))).c2;
}

double ConcurrenceProfile::one_to_rest_c(int party) const {
  return at(Bipartition::canonical(n_qubits_, QubitSubset(1u << party))).c;
}

ConcurrenceProfile profile(const StateVector& state) {
  const int n = state.num_qubits();
  if (n != 3 && n != 4) {
    throw Error(ErrorCode::kUnsupportedSize,
                "concurrence profiles are defined for 3 or 4 qubits, got " + std::to_string(n));
  }
  std::vector<ProfileEntry> entries;
  for (const auto& cut : enumerate_bipartitions(n)) {
    ProfileEntry e{cut, 0.0, squared_concurrence(state, cut), std::nullopt};
    e.c = std::sqrt(e.c2);
    if (cut.kind() == CutKind::kOneToRest) {
      // A single-qubit marginal has purity >= 1/2, so c2 <= 1 up to rounding.
      e.schmidt_weight = schmidt_weight_from_squared(std::min(e.c2, 1.0));
    }
    entries.push_back(e);
  }
  return ConcurrenceProfile(n, std::move(entries));
}

bool is_separable(const ProfileEntry& entry, double threshold) { return entry.c < threshold; }

}  // namespace entanglemetry
