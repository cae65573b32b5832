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

#include "entanglemetry/state.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numeric>

#include "entanglemetry/catalog.hpp"
#include "entanglemetry/error.hpp"
#include "entanglemetry/rng.hpp"
#include "oracle.hpp"

namespace entanglemetry {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::kMalformedInput;
}

TEST(StateVector, BasisStateSingleQubit) {
  const auto s = StateVector::from_amplitudes(1, {1.0, 0.0});
  EXPECT_EQ(s.num_qubits(), 1);
  EXPECT_EQ(s[0], Complex(1.0, 0.0));
  EXPECT_EQ(s[1], Complex(0.0, 0.0));
}

TEST(StateVector, RenormalizesUnnormalizedBell) {
  const auto s = StateVector::from_amplitudes(2, {1.0, 0.0, 0.0, 1.0});
  EXPECT_NEAR(s[0].real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(s[3].real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(s.norm(), 1.0, 1e-15);
}

TEST(StateVector, StrictPolicyRejectsLargeDeviation) {
  EXPECT_EQ(code_of([] {
              StateVector::from_amplitudes(2, {1.0, 0.0, 0.0, 1.0}, NormPolicy::kStrict);
            }),
            ErrorCode::kNormOutOfTolerance);
  const auto near = StateVector::from_amplitudes(1, {1.0 + 1e-8, 0.0}, NormPolicy::kStrict);
  EXPECT_NEAR(near.norm(), 1.0, 1e-15);
}

TEST(StateVector, Errors) {
  EXPECT_EQ(code_of([] { StateVector::from_amplitudes(2, {1.0, 0.0}); }),
            ErrorCode::kLengthMismatch);
  EXPECT_EQ(code_of([] { StateVector::from_amplitudes(1, {0.0, 0.0}); }),
            ErrorCode::kZeroVector);
}

TEST(ReducedDensity, ProductStateMarginalIsPure) {
  // |0> x GHZ3 keeping A.
  const auto s = tensor_product(basis_state("0"), ghz_state(3));
  const auto rho = reduced_density(s, QubitSubset::of({0}));
  EXPECT_NEAR(rho(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(rho(1, 1)), 0.0, 1e-15);
  EXPECT_NEAR(purity(rho), 1.0, 1e-15);
}

TEST(ReducedDensity, W4MarginalAndPurity) {
  const auto w = w_state(4);
  const auto rho = reduced_density(w, QubitSubset::of({0}));
  EXPECT_NEAR(rho(0, 0).real(), 0.75, 1e-15);
  EXPECT_NEAR(rho(1, 1).real(), 0.25, 1e-15);
  EXPECT_NEAR(std::abs(rho(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(purity(rho), 5.0 / 8.0, 1e-15);
  EXPECT_NEAR(linear_entropy(rho), 3.0 / 8.0, 1e-15);
}

TEST(ReducedDensity, GhzPairIsMixed) {
  const auto rho = reduced_density(ghz_state(4), QubitSubset::of({0, 1}));
  EXPECT_NEAR(purity(rho), 0.5, 1e-15);
}

TEST(ReducedDensity, Errors) {
  const auto s = ghz_state(4);
  EXPECT_EQ(code_of([&] { reduced_density(s, QubitSubset(0)); }), ErrorCode::kEmptySubset);
  EXPECT_EQ(code_of([&] { reduced_density(s, QubitSubset(0xF)); }), ErrorCode::kFullSubset);
}

TEST(ReducedDensity, MatchesOracleAndDenseReferenceOnHaarStates) {
  SampleRng rng(derive_seed(11, 0));
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    const auto s = haar_state(n, rng);
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      const QubitSubset keep(mask);
      const auto rho = reduced_density(s, keep);
      const auto dense = reference::reduced_density_dense(s, keep);
      const auto oracle_rho = oracle::reduced(s, keep.qubits());
      ASSERT_EQ(rho.dimension(), static_cast<std::size_t>(oracle_rho.rows()));
      for (std::size_t r = 0; r < rho.dimension(); ++r) {
        for (std::size_t c = 0; c < rho.dimension(); ++c) {
          ASSERT_NEAR(std::abs(rho(r, c) - dense(r, c)), 0.0, 1e-13);
          ASSERT_NEAR(std::abs(rho(r, c) - oracle_rho(r, c)), 0.0, 1e-13);
        }
      }
      EXPECT_NEAR(std::abs(rho.trace() - 1.0), 0.0, 1e-12);
      EXPECT_NEAR(reduced_purity(s, keep), oracle::purity(s, keep.qubits()), 1e-12);
    }
  }
}

TEST(ReducedPurity, ComplementSymmetry) {
  SampleRng rng(derive_seed(12, 0));
  const auto s = haar_state(4, rng);
  for (std::uint32_t mask = 1; mask < 15; ++mask) {
    const QubitSubset keep(mask);
    EXPECT_NEAR(purity(reduced_density(s, keep)), purity(reduced_density(s, keep.complement(4))),
                1e-13);
  }
}

TEST(LinearEntropy, AgreesWithPurityOnHaarStates) {
  SampleRng rng(derive_seed(15, 0));
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 6;
    const auto s = haar_state(n, rng);
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      EXPECT_NEAR(reduced_linear_entropy(s, QubitSubset(mask)),
                  1.0 - oracle::purity(s, QubitSubset(mask).qubits()), 1e-12);
    }
  }
}

TEST(LinearEntropy, ProductCutIsZeroToRounding) {
  SampleRng rng(derive_seed(16, 0));
  const auto s = tensor_product(haar_state(2, rng), haar_state(3, rng));
  EXPECT_LT(reduced_linear_entropy(s, QubitSubset::of({0, 1})), 1e-30);
  EXPECT_LT(reduced_linear_entropy(s, QubitSubset::of({2, 3, 4})), 1e-30);
  EXPECT_GT(reduced_linear_entropy(s, QubitSubset::of({0, 2})), 1e-6);
}

TEST(DensityMatrix, ValidatesInput) {
  EXPECT_EQ(code_of([] { DensityMatrix::from_entries(1, {1.0, 1.0, 0.0, 0.0}); }),
            ErrorCode::kInvalidDensityMatrix);
  EXPECT_EQ(code_of([] { DensityMatrix::from_entries(1, {0.5, 0.0, 0.0, 0.6}); }),
            ErrorCode::kInvalidDensityMatrix);
  EXPECT_EQ(code_of([] { DensityMatrix::from_entries(1, {1.5, 0.0, 0.0, -0.5}); }),
            ErrorCode::kInvalidDensityMatrix);
  const auto rho = DensityMatrix::from_entries(1, {0.5, 0.5, 0.5, 0.5});
  EXPECT_NEAR(purity(rho), 1.0, 1e-15);
  const auto ev = rho.eigenvalues();
  EXPECT_NEAR(*std::max_element(ev.begin(), ev.end()), 1.0, 1e-12);
}

TEST(TensorProduct, BasisStates) {
  const auto s = tensor_product(basis_state("0"), basis_state("1"));
  EXPECT_EQ(s.num_qubits(), 2);
  EXPECT_NEAR(std::abs(s[1]), 1.0, 1e-15);
  EXPECT_EQ(code_of([] { tensor_product(ghz_state(4), ghz_state(5)); }),
            ErrorCode::kSizeOverflow);
}

TEST(TensorProduct, GhzFactorIsSeparable) {
  const auto s = tensor_product(basis_state("0"), ghz_state(3));
  EXPECT_NEAR(reduced_purity(s, QubitSubset::of({0})), 1.0, 1e-15);
}

TEST(PermuteQubits, SwapMovesSupport) {
  const auto s = basis_state("0110");
  const std::array<int, 4> swap_ab{1, 0, 2, 3};
  const auto t = permute_qubits(s, swap_ab);
  EXPECT_NEAR(std::abs(t[0b1010]), 1.0, 1e-15);
  const std::array<int, 4> bad{0, 0, 1, 2};
  EXPECT_EQ(code_of([&] { permute_qubits(s, bad); }), ErrorCode::kInvalidPermutation);
}

TEST(PermuteQubits, PreservesCutPurities) {
  SampleRng rng(derive_seed(13, 0));
  const auto s = haar_state(4, rng);
  std::array<int, 4> perm{2, 0, 3, 1};
  const auto t = permute_qubits(s, perm);
  for (std::uint32_t mask = 1; mask < 15; ++mask) {
    std::uint32_t moved = 0;
    for (int q = 0; q < 4; ++q) {
      if ((mask >> q) & 1u) moved |= 1u << perm[q];
    }
    EXPECT_NEAR(reduced_purity(s, QubitSubset(mask)), reduced_purity(t, QubitSubset(moved)),
                1e-13);
  }
}

TEST(LocalUnitary, PreservesNormAndPurities) {
  SampleRng rng(derive_seed(14, 0));
  const auto s = haar_state(4, rng);
  auto t = s;
  for (int q = 0; q < 4; ++q) t = apply_local_unitary(t, q, haar_unitary(rng));
  EXPECT_NEAR(t.norm(), 1.0, 1e-13);
  for (std::uint32_t mask = 1; mask < 15; ++mask) {
    EXPECT_NEAR(reduced_purity(s, QubitSubset(mask)), reduced_purity(t, QubitSubset(mask)),
                1e-12);
  }
}

TEST(QubitSubset, Basics) {
  const auto s = QubitSubset::of({0, 2});
  EXPECT_EQ(s.mask(), 0b101u);
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.complement(4).mask(), 0b1010u);
  EXPECT_EQ(s.qubits(), (std::vector<int>{0, 2}));
}

}  // namespace
}  // namespace entanglemetry
