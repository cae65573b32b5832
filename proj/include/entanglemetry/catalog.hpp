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
#include <string>
#include <string_view>
#include <vector>

#include "entanglemetry/rng.hpp"
#include "entanglemetry/state.hpp"

namespace entanglemetry {

// exp(2 pi i / 3)
Complex omega();

StateVector ghz_state(int n_qubits);
StateVector w_state(int n_qubits);
// (|0000> + |0011> + |1100> - |1111>) / 2
StateVector cluster4_state();
// (1/sqrt 6)[|0011> + |1100> + w(|0101> + |1010>) + w^2(|0110> + |1001>)]
StateVector higuchi_sudbery_state();
// Bell pair on AB times Bell pair on CD.
StateVector bell_pair_product_state();
StateVector basis_state(std::string_view bits);

enum class NamedKind { kGhz, kW, kCluster4, kHiguchiSudbery, kBellPairProduct, kBasis };

struct NamedState {
  NamedKind kind = NamedKind::kGhz;
  int n_qubits = 4;
  std::string bits;  // kBasis only

  // ghz3, ghz4, w3, w4, cluster4, hs, bellxbell, or a bitstring like 0101.
  static NamedState parse(std::string_view name);
  std::string name() const;
};

StateVector build_named(const NamedState& named);
StateVector build_named(std::string_view name);

enum class FamilyKind { kGabcd, kLab3 };

struct FamilyParams {
  FamilyKind family = FamilyKind::kGabcd;
  std::array<Complex, 4> params{};  // a, b, c, d (Lab3 uses a, b)

  // "gabcd:a,b,c,d" or "lab3:a,b" with complex literals such as 0.5-2i.
  static FamilyParams parse(std::string_view text);
  std::string to_string() const;
};

// Builds G_abcd or L_ab3 and normalizes. ZeroVector for all-zero parameters.
StateVector build_family(const FamilyParams& p);

enum class EnsembleKind { kHaar, kProductOneThree, kProductTwoTwo, kFullyProduct, kFamilySweep };

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::kHaar;
  int n_qubits = 4;  // Haar only; the product kinds are 4-qubit
  std::uint64_t seed = 0;
  std::size_t count = 1;

  // haar<N>, product13, product22, fullyproduct, family.
  static EnsembleSpec parse(std::string_view name, std::uint64_t seed, std::size_t count);
  std::string name() const;

  friend bool operator==(const EnsembleSpec&, const EnsembleSpec&) = default;
};

StateVector haar_state(int n_qubits, SampleRng& rng);
Unitary2 haar_unitary(SampleRng& rng);

// Sample `index` of the ensemble; a pure function of (spec, index).
StateVector sample_one(const EnsembleSpec& spec, std::size_t index);

// All spec.count samples, generated in parallel when threads != 1
// (threads <= 0 uses the OpenMP default). Output is independent of threads.
std::vector<StateVector> sample(const EnsembleSpec& spec, int threads = 0);

}  // namespace entanglemetry
