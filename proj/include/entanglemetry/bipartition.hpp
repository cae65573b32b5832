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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entanglemetry/state.hpp"

namespace entanglemetry {

enum class CutKind { kOneToRest, kTwoToTwo, kOther };

// A cut of the register into two complementary nonempty sides. The stored
// side is always the one containing qubit 0, so AB|CD and CD|AB compare equal.
class Bipartition {
 public:
  Bipartition() = default;
  static Bipartition canonical(int n_qubits, QubitSubset side);

  int num_qubits() const { return n_qubits_; }
  QubitSubset side_a() const { return side_a_; }
  QubitSubset side_b() const { return side_a_.complement(n_qubits_); }
  // The smaller side; for equal sizes, the side containing qubit 0.
  QubitSubset minor_side() const;
  CutKind kind() const;
  // Party letters, smaller side first: "A|BCD", "B|ACD", "AB|CD".
  std::string label() const;
  // Inverse of label(); either side order is accepted.
  static Bipartition parse(int n_qubits, std::string_view label);

  // The single party of a one-to-rest cut.
  int lone_party() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  Bipartition(int n_qubits, QubitSubset side_a) : n_qubits_(n_qubits), side_a_(side_a) {}

  int n_qubits_ = 0;
  QubitSubset side_a_;
};

char party_letter(int qubit);
std::string party_string(QubitSubset subset);

// All 2^(n-1) - 1 canonical cuts, ordered by the size of the smaller side
// and then by label. For n = 4: A|BCD, B|ACD, C|ABD, D|ABC, AB|CD, AC|BD, AD|BC.
std::vector<Bipartition> enumerate_bipartitions(int n_qubits);

// I-concurrence sqrt(2 (1 - Tr rho_A^2)) across the cut.
double concurrence(const StateVector& state, const Bipartition& cut);
double squared_concurrence(const StateVector& state, const Bipartition& cut);

// Y(C^2) = 1 - sqrt(1 - C^2) and its inverse C^2 = Y (2 - Y). Inputs within
// 1e-12 outside [0, 1] are clamped; anything further out is a DomainError.
double schmidt_weight_from_squared(double c2);
double squared_from_schmidt_weight(double y);

struct ProfileEntry {
  Bipartition cut;
  double c = 0.0;
  double c2 = 0.0;
  std::optional<double> schmidt_weight;  // one-to-rest cuts only

  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

class ConcurrenceProfile {
 public:
  ConcurrenceProfile() = default;
  ConcurrenceProfile(int n_qubits, std::vector<ProfileEntry> entries);

  int num_qubits() const { return n_qubits_; }
  const std::vector<ProfileEntry>& entries() const { return entries_; }

  const ProfileEntry& at(const Bipartition& cut) const;
  const ProfileEntry& at(std::string_view label) const;
  // Squared concurrence of party | rest.
  double one_to_rest_c2(int party) const;
  double one_to_rest_c(int party) const;

  friend bool operator==(const ConcurrenceProfile&, const ConcurrenceProfile&) = default;

 private:
  int n_qubits_ = 0;
  std::vector<ProfileEntry> entries_;
};

// Full profile over enumerate_bipartitions for 3- and 4-qubit states.
ConcurrenceProfile profile(const StateVector& state);

// Cuts whose concurrence is below `threshold`.
inline constexpr double kZeroThreshold = 1e-7;
bool is_separable(const ProfileEntry& entry, double threshold = kZeroThreshold);

}  // namespace entanglemetry
