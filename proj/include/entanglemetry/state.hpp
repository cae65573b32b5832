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
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace entanglemetry {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 8;

// Tolerances shared by the state constructors.
inline constexpr double kRenormalizeTolerance = 1e-6;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-10;

// Set of qubit indices. Bit i of the mask is qubit i (party A is qubit 0).
class QubitSubset {
 public:
  constexpr QubitSubset() = default;
  constexpr explicit QubitSubset(std::uint32_t mask) : mask_(mask) {}
  static QubitSubset of(std::initializer_list<int> qubits);

  constexpr std::uint32_t mask() const { return mask_; }
  int size() const;
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int qubit) const { return (mask_ >> qubit) & 1u; }
  constexpr QubitSubset complement(int n_qubits) const {
    return QubitSubset(~mask_ & ((1u << n_qubits) - 1u));
  }
  // Qubit indices in increasing order.
  std::vector<int> qubits() const;

  friend constexpr bool operator==(QubitSubset, QubitSubset) = default;

 private:
  std::uint32_t mask_ = 0;
};

enum class NormPolicy {
  kRenormalize,  // any nonzero vector is rescaled to unit norm
  kStrict,       // rescale only when | ||psi|| - 1 | < 1e-6, reject otherwise
};

// Normalized pure state of n qubits. Basis index b stores qubit 0 in its most
// significant bit, so |0001> is index 1 and |1000> is index 8 for n = 4.
class StateVector {
 public:
  static StateVector from_amplitudes(int n_qubits, std::vector<Complex> amps,
                                     NormPolicy policy = NormPolicy::kRenormalize);

  int num_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  const Complex& operator[](std::size_t index) const { return amps_[index]; }
  double norm() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  StateVector(int n_qubits, std::vector<Complex> amps)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {}

  int n_qubits_ = 0;
  std::vector<Complex> amps_;
};

// Row-major 2^n x 2^n density matrix on a qubit register.
class DensityMatrix {
 public:
  // Validates hermiticity, unit trace and eigenvalue floor.
  static DensityMatrix from_entries(int n_qubits, std::vector<Complex> entries);

  int num_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return dim_; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  std::span<const Complex> entries() const { return entries_; }
  Complex trace() const;
  // Ascending eigenvalues of the Hermitian matrix.
  std::vector<double> eigenvalues() const;

 private:
  friend DensityMatrix make_density_unchecked(int, std::vector<Complex>);
  DensityMatrix(int n_qubits, std::vector<Complex> entries);

  int n_qubits_ = 0;
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

using Unitary2 = std::array<Complex, 4>;  // row-major 2x2

// rho_keep = Tr_{complement}(|psi><psi|). Reduced basis keeps the MSB-first
// order of the kept qubits.
DensityMatrix reduced_density(const StateVector& state, QubitSubset keep);

// Tr(rho^2) = sum_jk |rho_jk|^2.
double purity(const DensityMatrix& rho);
double linear_entropy(const DensityMatrix& rho);

// Purity of the reduced state without materializing the matrix.
double reduced_purity(const StateVector& state, QubitSubset keep);

// 1 - Tr(rho_keep^2) for a unit-norm state, accurate near zero (product cuts).
double reduced_linear_entropy(const StateVector& state, QubitSubset keep);

// a's qubits become the leading (more significant) qubits.
StateVector tensor_product(const StateVector& a, const StateVector& b);

// Qubit q of the input becomes qubit perm[q] of the output.
StateVector permute_qubits(const StateVector& state, std::span<const int> perm);

// Applies u to one qubit; other qubits untouched.
StateVector apply_local_unitary(const StateVector& state, int qubit,
                                const Unitary2& u);

// Kept for testing: partial trace through the full |psi><psi|.
namespace reference {
DensityMatrix reduced_density_dense(const StateVector& state, QubitSubset keep);
}  // namespace reference

}  // namespace entanglemetry
