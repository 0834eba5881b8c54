// Copyright 2026 The gaussdp Authors
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

#include "gaussdp/mechanism.h"

#include <cmath>
#include <limits>

#include "gtest/gtest.h"
#include "gaussdp/errors.h"
#include "gaussdp/profile.h"
#include "reference_values.h"

namespace gaussdp {
namespace {

TEST(SensitivityIndex, FromParams) {
  EXPECT_DOUBLE_EQ(SensitivityIndex::FromParams({1.0, 1.0}).value(), 1.0);
  EXPECT_DOUBLE_EQ(SensitivityIndex::FromParams({2.0, 4.0}).value(), 0.5);
  EXPECT_DOUBLE_EQ(SensitivityIndex::FromParams({1.0, 1e6}).value(), 1e-6);
}

TEST(SensitivityIndex, RejectsInvalidParams) {
  EXPECT_THROW(SensitivityIndex::FromParams({0.0, 1.0}), DomainError);
  EXPECT_THROW(SensitivityIndex::FromParams({-1.0, 1.0}), DomainError);
  EXPECT_THROW(SensitivityIndex::FromParams({1.0, 0.0}), DomainError);
  EXPECT_THROW(SensitivityIndex::FromParams({1.0, -2.0}), DomainError);
  EXPECT_THROW(
      SensitivityIndex::FromParams(
          {std::numeric_limits<double>::quiet_NaN(), 1.0}),
      DomainError);
}

TEST(SensitivityIndex, RejectsNegativeOrNonFinite) {
  EXPECT_THROW(SensitivityIndex(-0.1), DomainError);
  EXPECT_THROW(SensitivityIndex(std::numeric_limits<double>::infinity()),
               DomainError);
  EXPECT_DOUBLE_EQ(SensitivityIndex(0.0).value(), 0.0);
}

TEST(PrivacyLossOf, SpotValues) {
  const PrivacyLossDistribution degenerate = PrivacyLossOf(SensitivityIndex(0.0));
  EXPECT_DOUBLE_EQ(degenerate.mean, 0.0);
  EXPECT_DOUBLE_EQ(degenerate.variance, 0.0);

  const PrivacyLossDistribution two = PrivacyLossOf(SensitivityIndex(2.0));
  EXPECT_DOUBLE_EQ(two.mean, 2.0);
  EXPECT_DOUBLE_EQ(two.variance, 4.0);

  const PrivacyLossDistribution one = PrivacyLossOf(SensitivityIndex(1.0));
  EXPECT_DOUBLE_EQ(one.mean, 0.5);
  EXPECT_DOUBLE_EQ(one.variance, 1.0);
}

TEST(PrivacyLossOf, VarianceIsTwiceMean) {
  for (double psi : {0.0, 0.3, 1.0, 2.5, 7.0, 40.0}) {
    const PrivacyLossDistribution dist = PrivacyLossOf(SensitivityIndex(psi));
    EXPECT_DOUBLE_EQ(dist.variance, 2.0 * dist.mean) << psi;
  }
}

TEST(PrivacyLossTail, SpotValues) {
  EXPECT_NEAR(PrivacyLossTailProbability(SensitivityIndex(1.0), 0.0),
              testref::kStdNormalCdfAtHalf, 1e-15);
  EXPECT_DOUBLE_EQ(PrivacyLossTailProbability(SensitivityIndex(2.0), 2.0),
                   0.5);
  const double deep = PrivacyLossTailProbability(SensitivityIndex(1.0), 10.0);
  EXPECT_NEAR(deep, testref::kStdNormalCdfAtMinus9p5,
              1e-12 * testref::kStdNormalCdfAtMinus9p5);
}

TEST(PrivacyLossTail, DegenerateIndex) {
  EXPECT_DOUBLE_EQ(PrivacyLossTailProbability(SensitivityIndex(0.0), 1.0),
                   0.0);
  EXPECT_THROW(PrivacyLossTailProbability(SensitivityIndex(0.0), 0.0),
               DomainError);
  EXPECT_THROW(PrivacyLossTailProbability(SensitivityIndex(1.0), -1.0),
               DomainError);
}

TEST(PrivacyLossTail, MonotoneInEpsilonAndIndex) {
  for (double psi : {0.3, 1.0, 2.0, 5.0}) {
    double prev = PrivacyLossTailProbability(SensitivityIndex(psi), 0.0);
    for (double eps : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
      const double curr = PrivacyLossTailProbability(SensitivityIndex(psi), eps);
      EXPECT_LT(curr, prev) << psi << " " << eps;
      prev = curr;
    }
  }
  for (double eps : {0.5, 1.0, 3.0}) {
    double prev = PrivacyLossTailProbability(SensitivityIndex(0.2), eps);
    for (double psi : {0.5, 1.0, 2.0, 4.0}) {
      const double curr = PrivacyLossTailProbability(SensitivityIndex(psi), eps);
      EXPECT_GT(curr, prev) << psi << " " << eps;
      prev = curr;
    }
  }
}

// The single-tail probability upper-bounds the tight profile everywhere.
TEST(PrivacyLossTail, DominatesTightDelta) {
  for (double psi : {0.1, 0.5, 1.0, 2.0, 4.0, 6.0}) {
    for (double eps : {0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
      const SensitivityIndex index(psi);
      EXPECT_GE(PrivacyLossTailProbability(index, eps),
                DeltaOfEpsilon(index, eps))
          << psi << " " << eps;
    }
  }
}

}  // namespace
}  // namespace gaussdp
