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

#include "entanglemetry/measures.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "entanglemetry/catalog.hpp"
#include "entanglemetry/rng.hpp"
#include "oracle.hpp"

namespace entanglemetry {
namespace {

const double kSqrt3 = std::sqrt(3.0);

// Independent recomputation: textbook Heron over the fixed six triangles.
double oracle_measure(const StateVector& s, bool squared) {
  auto side = [&](std::vector<int> keep) {
    const double c2 = oracle::c2(s, keep);
    return squared ? c2 : std::sqrt(c2);
  };
  const double a = side({0}), b = side({1}), c = side({2}), d = side({3});
  const double ab = side({0, 1}), ac = side({0, 2}), ad = side({0, 3});
  const std::array<std::array<double, 3>, 6> tri{{{a, b, ab},
                                                  {c, d, ab},
                                                  {a, c, ac},
                                                  {b, d, ac},
                                                  {a, d, ad},
                                                  {b, c, ad}}};
  double prod = 1.0;
  for (const auto& t : tri) prod *= (4.0 / kSqrt3) * oracle::heron(t[0], t[1], t[2]);
  return std::pow(prod, 1.0 / 6.0);
}

TEST(SixTriangles, Sides) {
  for (const auto& t : six_triangles(profile(ghz_state(4)), SideMode::kSquared)) {
    for (double s : t.sides) EXPECT_NEAR(s, 1.0, 1e-12);
  }
  for (const auto& t : six_triangles(profile(w_state(4)), SideMode::kSquared)) {
    auto s = t.sides;
    std::sort(s.begin(), s.end());
    EXPECT_NEAR(s[0], 0.75, 1e-12);
    EXPECT_NEAR(s[1], 0.75, 1e-12);
    EXPECT_NEAR(s[2], 1.0, 1e-12);
  }
  int unit = 0, wide = 0;
  for (const auto& t : six_triangles(profile(cluster4_state()), SideMode::kSquared)) {
    auto s = t.sides;
    std::sort(s.begin(), s.end());
    EXPECT_NEAR(s[0], 1.0, 1e-12);
    EXPECT_NEAR(s[1], 1.0, 1e-12);
    if (std::abs(s[2] - 1.0) < 1e-12) ++unit;
    if (std::abs(s[2] - 1.5) < 1e-12) ++wide;
  }
  EXPECT_EQ(unit, 2);
  EXPECT_EQ(wide, 4);
}

TEST(Gme, ClosedFormValues) {
  EXPECT_NEAR(gme_f(ghz_state(4)), 1.0, 1e-12);
  EXPECT_NEAR(gme_f1(ghz_state(4)), 1.0, 1e-12);
  EXPECT_NEAR(gme_f(w_state(4)), std::sqrt(15.0) / 6.0, 1e-12);
  EXPECT_NEAR(gme_f1(w_state(4)), std::sqrt(2.0 / 3.0), 1e-12);
}

TEST(Gme, TableValuesToThreeDecimals) {
  EXPECT_NEAR(gme_f(cluster4_state()), 1.095, 5e-4);
  EXPECT_NEAR(gme_f1(cluster4_state()), 1.077, 5e-4);
  EXPECT_NEAR(gme_f(higuchi_sudbery_state()), 1.148, 5e-4);
  EXPECT_NEAR(gme_f1(higuchi_sudbery_state()), 1.089, 5e-4);
}

TEST(Gme, MatchesOracleOnHaarStates) {
  SampleRng rng(derive_seed(41, 0));
  for (int t = 0; t < 300; ++t) {
    const auto s = haar_state(4, rng);
    EXPECT_NEAR(gme_f(s), oracle_measure(s, true), 1e-10);
    EXPECT_NEAR(gme_f1(s), oracle_measure(s, false), 1e-10);
  }
}

TEST(Gme, RecomputableFromStoredAreas) {
  SampleRng rng(derive_seed(42, 0));
  const auto r = gme_report(haar_state(4, rng));
  std::array<double, 6> a{}, b{};
  for (int i = 0; i < 6; ++i) {
    a[i] = r.triangles[i].area_squared_mode;
    b[i] = r.triangles[i].area_concurrence_mode;
  }
  EXPECT_NEAR(scaled_geometric_mean(a), r.f, 1e-12);
  EXPECT_NEAR(scaled_geometric_mean(b), r.f1, 1e-12);
  EXPECT_NEAR(r.normalization, 4.0 / kSqrt3, 1e-15);
}

TEST(Gme, SeparableStatesVanish) {
  SampleRng rng(derive_seed(43, 0));
  const auto one_three = tensor_product(basis_state("1"), haar_state(3, rng));
  const auto two_two = tensor_product(haar_state(2, rng), haar_state(2, rng));
  for (const auto& s : {one_three, two_two, bell_pair_product_state()}) {
    const auto r = gme_report(s);
    EXPECT_EQ(r.f, 0.0);
    EXPECT_EQ(r.f1, 0.0);
    EXPECT_NE(r.separability.kind, SeparabilityKind::kGenuinelyEntangled);
  }
}

TEST(Gme, ZeroIffSeparable) {
  SampleRng rng(derive_seed(44, 0));
  for (int t = 0; t < 200; ++t) {
    const auto r = gme_report(haar_state(4, rng));
    EXPECT_GT(r.f, 0.0);
    EXPECT_EQ(r.separability.kind, SeparabilityKind::kGenuinelyEntangled);
  }
}

TEST(Fill, ThreeQubitExamples) {
  EXPECT_NEAR(concurrence_fill_3q(ghz_state(3)), 1.0, 1e-12);
  EXPECT_NEAR(concurrence_fill_3q(w_state(3)), 64.0 / 81.0, 1e-12);
  SampleRng rng(derive_seed(45, 0));
  const auto product = tensor_product(basis_state("0"), haar_state(2, rng));
  EXPECT_EQ(concurrence_fill_3q(product), 0.0);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_separability(profile(ghz_state(4))).kind,
            SeparabilityKind::kGenuinelyEntangled);
  const auto bell = classify_separability(profile(bell_pair_product_state()));
  EXPECT_EQ(bell.kind, SeparabilityKind::kTwoToTwoSeparable);
  ASSERT_EQ(bell.separable_cuts.size(), 1u);
  EXPECT_EQ(bell.separable_cuts[0].label(), "AB|CD");

  const auto s = tensor_product(tensor_product(basis_state("0"), basis_state("0")),
                                ghz_state(2));
  const auto c = classify_separability(profile(s));
  EXPECT_EQ(c.kind, SeparabilityKind::kOneToRestSeparable);
  std::vector<std::string> labels;
  for (const auto& b : c.separable_cuts) labels.push_back(b.label());
  EXPECT_NE(std::find(labels.begin(), labels.end(), "A|BCD"), labels.end());
  EXPECT_NE(std::find(labels.begin(), labels.end(), "B|ACD"), labels.end());
  EXPECT_NE(std::find(labels.begin(), labels.end(), "AB|CD"), labels.end());

  EXPECT_EQ(classify_separability(profile(basis_state("0110"))).kind,
            SeparabilityKind::kFullyProduct);
}

TEST(Classify, StringRoundTrip) {
  for (auto k : {SeparabilityKind::kGenuinelyEntangled, SeparabilityKind::kOneToRestSeparable,
                 SeparabilityKind::kTwoToTwoSeparable, SeparabilityKind::kFullyProduct}) {
    EXPECT_EQ(separability_kind_from_string(to_string(k)), k);
  }
}

}  // namespace
}  // namespace entanglemetry
