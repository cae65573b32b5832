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

#include "entanglemetry/catalog.hpp"

#include <omp.h>

#include <cmath>
#include <numbers>
#include <string>

#include "entanglemetry/error.hpp"
#include "entanglemetry/kets.hpp"

namespace entanglemetry {

namespace {

std::size_t bits_index(std::string_view bits) {
  std::size_t index = 0;
  for (char b : bits) index = (index << 1) | (b == '1' ? 1u : 0u);
  return index;
}

// Amplitude vector from (bitstring, coefficient) pairs; repeated kets add up.
StateVector from_terms(int n, std::initializer_list<std::pair<std::string_view, Complex>> terms) {
  std::vector<Complex> amps(std::size_t{1} << n);
  for (const auto& [bits, coeff] : terms) amps[bits_index(bits)] += coeff;
  return StateVector::from_amplitudes(n, std::move(amps));
}

std::string format_complex(Complex z) {
  char buf[64];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  }
  return buf;
}

// Moves qubit 0 to `target`, keeping the other qubits in order.
std::vector<int> lift_single(int target) {
  std::vector<int> perm(4);
  perm[0] = target;
  int next = 0;
  for (int q = 1; q < 4; ++q) {
    if (next == target) ++next;
    perm[q] = next++;
  }
  return perm;
}

// Maps qubits (0, 1 | 2, 3) to (0, partner | rest).
std::vector<int> pair_with(int partner) {
  std::vector<int> perm{0, partner, 0, 0};
  int slot = 2;
  for (int q = 1; q < 4; ++q) {
    if (q != partner) perm[slot++] = q;
  }
  return perm;
}

}  // namespace

Complex omega() { return std::polar(1.0, 2.0 * std::numbers::pi / 3.0); }

StateVector ghz_state(int n) {
  if (n < 2 || n > kMaxQubits) throw Error(ErrorCode::kUnsupportedSize, "GHZ needs 2 to 8 qubits");
  std::vector<Complex> amps(std::size_t{1} << n);
  amps.front() = amps.back() = 1.0 / std::sqrt(2.0);
  return StateVector::from_amplitudes(n, std::move(amps));
}

StateVector w_state(int n) {
  if (n < 2 || n > kMaxQubits) throw Error(ErrorCode::kUnsupportedSize, "W needs 2 to 8 qubits");
  std::vector<Complex> amps(std::size_t{1} << n);
  for (int q = 0; q < n; ++q) amps[std::size_t{1} << q] = 1.0 / std::sqrt(double(n));
  return StateVector::from_amplitudes(n, std::move(amps));
}

StateVector cluster4_state() {
  return from_terms(4, {{"0000", 0.5}, {"0011", 0.5}, {"1100", 0.5}, {"1111", -0.5}});
}

StateVector higuchi_sudbery_state() {
  const double s = 1.0 / std::sqrt(6.0);
  const Complex w = omega();
  const Complex w2 = w * w;
  return from_terms(4, {{"0011", s}, {"1100", s}, {"0101", s * w}, {"1010", s * w},
                        {"0110", s * w2}, {"1001", s * w2}});
}

StateVector bell_pair_product_state() {
  const StateVector bell = ghz_state(2);
  return tensor_product(bell, bell);
}

StateVector basis_state(std::string_view bits) {
  const int n = static_cast<int>(bits.size());
  if (n < 1 || n > kMaxQubits) throw Error(ErrorCode::kUnsupportedSize, "basis state needs 1 to 8 bits");
  for (char b : bits) {
    if (b != '0' && b != '1') throw Error(ErrorCode::kUnknownName, "not a bitstring: " + std::string(bits));
  }
  std::vector<Complex> amps(std::size_t{1} << n);
  amps[bits_index(bits)] = 1.0;
  return StateVector::from_amplitudes(n, std::move(amps));
}

NamedState NamedState::parse(std::string_view name) {
  if (name == "ghz3") return {NamedKind::kGhz, 3, {}};
  if (name == "ghz4") return {NamedKind::kGhz, 4, {}};
  if (name == "w3") return {NamedKind::kW, 3, {}};
  if (name == "w4") return {NamedKind::kW, 4, {}};
  if (name == "cluster4") return {NamedKind::kCluster4, 4, {}};
  if (name == "hs") return {NamedKind::kHiguchiSudbery, 4, {}};
  if (name == "bellxbell") return {NamedKind::kBellPairProduct, 4, {}};
  if (!name.empty() && name.size() <= kMaxQubits &&
      name.find_first_not_of("01") == std::string_view::npos) {
    return {NamedKind::kBasis, static_cast<int>(name.size()), std::string(name)};
  }
  throw Error(ErrorCode::kUnknownName, "unknown state name '" + std::string(name) +
                                           "' (expected ghz3, ghz4, w3, w4, cluster4, hs, "
                                           "bellxbell or a bitstring)");
}

std::string NamedState::name() const {
  switch (kind) {
    case NamedKind::kGhz: return "ghz" + std::to_string(n_qubits);
    case NamedKind::kW: return "w" + std::to_string(n_qubits);
    case NamedKind::kCluster4: return "cluster4";
    case NamedKind::kHiguchiSudbery: return "hs";
    case NamedKind::kBellPairProduct: return "bellxbell";
    case NamedKind::kBasis: return bits;
  }
  return "unknown";
}

StateVector build_named(const NamedState& named) {
  switch (named.kind) {
    case NamedKind::kGhz: return ghz_state(named.n_qubits);
    case NamedKind::kW: return w_state(named.n_qubits);
    case NamedKind::kCluster4: return cluster4_state();
    case NamedKind::kHiguchiSudbery: return higuchi_sudbery_state();
    case NamedKind::kBellPairProduct: return bell_pair_product_state();
    case NamedKind::kBasis: return basis_state(named.bits);
  }
  throw Error(ErrorCode::kUnknownName, "unknown named state");
}

StateVector build_named(std::string_view name) { return build_named(NamedState::parse(name)); }

FamilyParams FamilyParams::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kUnknownName, "family spec needs 'name:params': " + std::string(text));
  }
  const std::string_view family = text.substr(0, colon);
  FamilyParams p;
  std::size_t expected = 0;
  if (family == "gabcd") {
    p.family = FamilyKind::kGabcd;
    expected = 4;
  } else if (family == "lab3") {
    p.family = FamilyKind::kLab3;
    expected = 2;
  } else {
    throw Error(ErrorCode::kUnknownName, "unknown family '" + std::string(family) + "'");
  }
  std::string_view rest = text.substr(colon + 1);
  std::size_t count = 0;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    if (count >= expected) {
      throw Error(ErrorCode::kInvalidConfig, "too many parameters for " + std::string(family));
    }
    p.params[count++] = parse_scalar(item);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (count != expected) {
    throw Error(ErrorCode::kInvalidConfig, std::string(family) + " expects " +
                                               std::to_string(expected) + " parameters");
  }
  return p;
}

std::string FamilyParams::to_string() const {
  const std::size_t count = family == FamilyKind::kGabcd ? 4 : 2;
  std::string out = family == FamilyKind::kGabcd ? "gabcd:" : "lab3:";
  for (std::size_t k = 0; k < count; ++k) {
    if (k) out += ",";
    out += format_complex(params[k]);
  }
  return out;
}

StateVector build_family(const FamilyParams& p) {
  const auto& [a, b, c, d] = p.params;
  if (p.family == FamilyKind::kGabcd) {
    return from_terms(4, {{"0000", (a + d) / 2.0}, {"1111", (a + d) / 2.0},
                          {"0011", (a - d) / 2.0}, {"1100", (a - d) / 2.0},
                          {"0101", (b + c) / 2.0}, {"1010", (b + c) / 2.0},
                          {"0110", (b - c) / 2.0}, {"1001", (b - c) / 2.0}});
  }
  const Complex tail = Complex(0.0, 1.0) / std::sqrt(2.0);
  return from_terms(4, {{"0000", a}, {"1111", a},
                        {"0101", (a + b) / 2.0}, {"1010", (a + b) / 2.0},
                        {"0110", (a - b) / 2.0}, {"1001", (a - b) / 2.0},
                        {"0001", tail}, {"0010", tail}, {"0111", tail}, {"1011", tail}});
}

EnsembleSpec EnsembleSpec::parse(std::string_view name, std::uint64_t seed, std::size_t count) {
  EnsembleSpec spec;
  spec.seed = seed;
  spec.count = count;
  if (name == "product13") {
    spec.kind = EnsembleKind::kProductOneThree;
  } else if (name == "product22") {
    spec.kind = EnsembleKind::kProductTwoTwo;
  } else if (name == "fullyproduct") {
    spec.kind = EnsembleKind::kFullyProduct;
  } else if (name == "family") {
    spec.kind = EnsembleKind::kFamilySweep;
  } else if (name.size() == 5 && name.substr(0, 4) == "haar" && name[4] >= '1' &&
             name[4] <= '0' + kMaxQubits) {
    spec.kind = EnsembleKind::kHaar;
    spec.n_qubits = name[4] - '0';
  } else {
    throw Error(ErrorCode::kUnknownName,
                "unknown ensemble '" + std::string(name) +
                    "' (expected haar<N>, product13, product22, fullyproduct, family)");
  }
  return spec;
}

std::string EnsembleSpec::name() const {
  switch (kind) {
    case EnsembleKind::kHaar: return "haar" + std::to_string(n_qubits);
    case EnsembleKind::kProductOneThree: return "product13";
    case EnsembleKind::kProductTwoTwo: return "product22";
    case EnsembleKind::kFullyProduct: return "fullyproduct";
    case EnsembleKind::kFamilySweep: return "family";
  }
  return "unknown";
}

StateVector haar_state(int n_qubits, SampleRng& rng) {
  std::vector<Complex> amps(std::size_t{1} << n_qubits);
  for (auto& a : amps) a = rng.complex_normal();
  return StateVector::from_amplitudes(n_qubits, std::move(amps));
}

Unitary2 haar_unitary(SampleRng& rng) {
  // Gram-Schmidt on a complex Ginibre matrix.
  Complex c0[2] = {rng.complex_normal(), rng.complex_normal()};
  Complex c1[2] = {rng.complex_normal(), rng.complex_normal()};
  const double n0 = std::sqrt(std::norm(c0[0]) + std::norm(c0[1]));
  c0[0] /= n0;
  c0[1] /= n0;
  const Complex overlap = std::conj(c0[0]) * c1[0] + std::conj(c0[1]) * c1[1];
  c1[0] -= overlap * c0[0];
  c1[1] -= overlap * c0[1];
  const double n1 = std::sqrt(std::norm(c1[0]) + std::norm(c1[1]));
  c1[0] /= n1;
  c1[1] /= n1;
  return {c0[0], c1[0], c0[1], c1[1]};
}

StateVector sample_one(const EnsembleSpec& spec, std::size_t index) {
  SampleRng rng(derive_seed(spec.seed, index));
  switch (spec.kind) {
    case EnsembleKind::kHaar: return haar_state(spec.n_qubits, rng);
    case EnsembleKind::kProductOneThree: {
      const int party = static_cast<int>(rng.below(4));
      const StateVector single = haar_state(1, rng);
      const StateVector rest = haar_state(3, rng);
      return permute_qubits(tensor_product(single, rest), lift_single(party));
    }
    case EnsembleKind::kProductTwoTwo: {
      const int partner = 1 + static_cast<int>(rng.below(3));
      const StateVector left = haar_state(2, rng);
      const StateVector right = haar_state(2, rng);
      return permute_qubits(tensor_product(left, right), pair_with(partner));
    }
    case EnsembleKind::kFullyProduct: {
      StateVector out = haar_state(1, rng);
      for (int q = 1; q < 4; ++q) out = tensor_product(out, haar_state(1, rng));
      return out;
    }
    case EnsembleKind::kFamilySweep: {
      FamilyParams p;
      p.family = index % 2 == 0 ? FamilyKind::kGabcd : FamilyKind::kLab3;
      for (auto& x : p.params) x = rng.complex_normal();
      return build_family(p);
    }
  }
  throw Error(ErrorCode::kInvalidConfig, "unknown ensemble kind");
}

std::vector<StateVector> sample(const EnsembleSpec& spec, int threads) {
  if (spec.count < 1) throw Error(ErrorCode::kInvalidCount, "ensemble count must be at least 1");
  std::vector<StateVector> out(spec.count, StateVector::from_amplitudes(1, {1.0, 0.0}));
  const int workers = threads > 0 ? threads : omp_get_max_threads();
  const auto count = static_cast<std::ptrdiff_t>(spec.count);
#pragma omp parallel for schedule(static) num_threads(workers)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = sample_one(spec, static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace entanglemetry
