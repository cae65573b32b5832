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

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "entanglemetry/catalog.hpp"
#include "entanglemetry/error.hpp"
#include "entanglemetry/rng.hpp"
#include "oracle.hpp"

namespace entanglemetry {
namespace {

std::vector<std::string> labels(int n) {
  std::vector<std::string> out;
  for (const auto& b : enumerate_bipartitions(n)) out.push_back(b.label());
  return out;
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_bipartitions(2).size(), 1u);
  const auto three = enumerate_bipartitions(3);
  ASSERT_EQ(three.size(), 3u);
  for (const auto& b : three) EXPECT_EQ(b.kind(), CutKind::kOneToRest);
  EXPECT_EQ(enumerate_bipartitions(5).size(), 15u);
}

TEST(Enumerate, FourQubitLabels) {
  EXPECT_EQ(labels(4), (std::vector<std::string>{"A|BCD", "B|ACD", "C|ABD", "D|ABC", "AB|CD",
                                                 "AC|BD", "AD|BC"}));
}

TEST(Bipartition, CanonicalKeepsQubitZeroSide) {
  const auto b = Bipartition::canonical(4, QubitSubset::of({1, 2, 3}));
  EXPECT_TRUE(b.side_a().contains(0));
  EXPECT_EQ(b.side_a(), QubitSubset::of({0}));
  EXPECT_EQ(b.label(), "A|BCD");
  EXPECT_EQ(Bipartition::canonical(4, b.side_a()), b);
  EXPECT_EQ(Bipartition::canonical(4, QubitSubset::of({2, 3})).label(), "AB|CD");
}

TEST(Bipartition, ParseAcceptsEitherOrder) {
  EXPECT_EQ(Bipartition::parse(4, "ACD|B"), Bipartition::parse(4, "B|ACD"));
  EXPECT_EQ(Bipartition::parse(4, "BD|AC").label(), "AC|BD");
  EXPECT_EQ(Bipartition::parse(4, "B|ACD").lone_party(), 1);
  EXPECT_THROW(Bipartition::parse(4, "AB|C"), Error);
  EXPECT_THROW(Bipartition::parse(4, "ABCD|"), Error);
}

TEST(Bipartition, Kinds) {
  EXPECT_EQ(Bipartition::parse(4, "C|ABD").kind(), CutKind::kOneToRest);
  EXPECT_EQ(Bipartition::parse(4, "AD|BC").kind(), CutKind::kTwoToTwo);
  EXPECT_EQ(Bipartition::parse(5, "AB|CDE").kind(), CutKind::kOther);
}

TEST(Concurrence, Examples) {
  EXPECT_NEAR(concurrence(ghz_state(4), Bipartition::parse(4, "A|BCD")), 1.0, 1e-12);
  const auto prod = tensor_product(basis_state("0"), ghz_state(3));
  EXPECT_NEAR(concurrence(prod, Bipartition::parse(4, "A|BCD")), 0.0, 1e-12);
  EXPECT_NEAR(concurrence(higuchi_sudbery_state(), Bipartition::parse(4, "AB|CD")),
              2.0 / std::sqrt(3.0), 1e-12);
}

TEST(SchmidtWeight, ForwardAndInverse) {
  EXPECT_DOUBLE_EQ(schmidt_weight_from_squared(0.0), 0.0);
  EXPECT_DOUBLE_EQ(schmidt_weight_from_squared(1.0), 1.0);
  EXPECT_NEAR(schmidt_weight_from_squared(0.75), 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(squared_from_schmidt_weight(0.0), 0.0);
  EXPECT_DOUBLE_EQ(squared_from_schmidt_weight(1.0), 1.0);
  EXPECT_NEAR(squared_from_schmidt_weight(0.5), 0.75, 1e-15);
  for (double y = 0.0; y <= 1.0; y += 0.01) {
    EXPECT_NEAR(schmidt_weight_from_squared(squared_from_schmidt_weight(y)), y, 1e-7);
  }
  EXPECT_THROW(schmidt_weight_from_squared(1.5), Error);
  EXPECT_THROW(squared_from_schmidt_weight(-0.1), Error);
}

void expect_profile(const StateVector& s, const std::array<double, 7>& c2) {
  const auto p = profile(s);
  ASSERT_EQ(p.entries().size(), 7u);
  for (std::size_t i = 0; i < 7; ++i) {
    const auto& e = p.entries()[i];
    EXPECT_NEAR(e.c2, c2[i], 1e-12) << e.cut.label();
    EXPECT_NEAR(e.c * e.c, e.c2, 1e-12);
    EXPECT_NEAR(e.c2, oracle::c2(s, e.cut.side_a().qubits()), 1e-12) << e.cut.label();
  }
}

TEST(Profile, ClosedForms) {
  expect_profile(ghz_state(4), {1, 1, 1, 1, 1, 1, 1});
  expect_profile(w_state(4), {0.75, 0.75, 0.75, 0.75, 1, 1, 1});
  expect_profile(cluster4_state(), {1, 1, 1, 1, 1, 1.5, 1.5});
  const double hs = 4.0 / 3.0;
  expect_profile(higuchi_sudbery_state(), {1, 1, 1, 1, hs, hs, hs});
}

TEST(Profile, SchmidtWeightsOnOneToRestOnly) {
  const auto p = profile(w_state(4));
  for (const auto& e : p.entries()) {
    EXPECT_EQ(e.schmidt_weight.has_value(), e.cut.kind() == CutKind::kOneToRest);
  }
  EXPECT_NEAR(*p.at("A|BCD").schmidt_weight, 0.5, 1e-12);
  EXPECT_NEAR(p.one_to_rest_c2(3), 0.75, 1e-12);
  EXPECT_NEAR(p.one_to_rest_c(3), std::sqrt(0.75), 1e-12);
}

TEST(Profile, RangesOnHaarStates) {
  SampleRng rng(derive_seed(21, 0));
  for (int i = 0; i < 200; ++i) {
    const auto p = profile(haar_state(4, rng));
    for (const auto& e : p.entries()) {
      const double hi = e.cut.kind() == CutKind::kOneToRest ? 1.0 : 1.5;
      EXPECT_GE(e.c2, 0.0);
      EXPECT_LE(e.c2, hi + 1e-12);
    }
  }
}

TEST(Profile, PermutationPermutesMultiset) {
  SampleRng rng(derive_seed(22, 0));
  const auto s = haar_state(4, rng);
  const std::array<int, 4> perm{3, 1, 0, 2};
  auto sorted = [](const ConcurrenceProfile& p) {
    std::vector<double> v;
    for (const auto& e : p.entries()) v.push_back(e.c2);
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto a = sorted(profile(s));
  const auto b = sorted(profile(permute_qubits(s, perm)));
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-12);
}

TEST(Profile, RejectsUnsupportedSizes) {
  EXPECT_THROW(profile(ghz_state(2)), Error);
  EXPECT_THROW(profile(ghz_state(5)), Error);
  EXPECT_EQ(profile(w_state(3)).entries().size(), 3u);
}

TEST(Separable, Threshold) {
  const auto p = profile(bell_pair_product_state());
  EXPECT_TRUE(is_separable(p.at("AB|CD")));
  EXPECT_FALSE(is_separable(p.at("AC|BD")));
}

}  // namespace
}  // namespace entanglemetry
