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

#include "gaussdp/tradeoff.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "gaussdp/errors.h"
#include "gaussdp/mechanism.h"
#include "gaussdp/normal.h"
#include "gaussdp/profile.h"
#include "reference_values.h"

namespace gaussdp {
namespace {

TEST(Roc, IdentityAtZeroIndex) {
  const TradeoffCurve curve{SensitivityIndex(0.0)};
  EXPECT_DOUBLE_EQ(curve.Roc(0.3), 0.3);
  EXPECT_DOUBLE_EQ(curve.Roc(1e-12), 1e-12);
}

TEST(Roc, ArgumentsCancel) {
  const TradeoffCurve curve{SensitivityIndex(1.0)};
  EXPECT_NEAR(curve.Roc(StdNormalCdf(-1.0)), 0.5, 1e-14);
}

TEST(Roc, MatchesOracle) {
  const TradeoffCurve curve{SensitivityIndex(2.0)};
  EXPECT_NEAR(curve.Roc(0.1), testref::kRocPsi2AtX0p1,
              1e-13 * testref::kRocPsi2AtX0p1);
}

TEST(Roc, RejectsOutOfRange) {
  const TradeoffCurve curve{SensitivityIndex(1.0)};
  EXPECT_THROW(curve.Roc(0.0), DomainError);
  EXPECT_THROW(curve.Roc(1.0), DomainError);
  EXPECT_THROW(curve.Roc(-0.2), DomainError);
}

TEST(Roc, IncreasingAndAboveDiagonal) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> xs(1e-6, 1.0 - 1e-6);
  for (double psi : {0.0, 0.5, 2.0}) {
    const TradeoffCurve curve{SensitivityIndex(psi)};
    for (int i = 0; i < 300; ++i) {
      const double x = xs(rng);
      const double y = curve.Roc(x);
      if (psi > 0.0) {
        EXPECT_GT(y, x) << psi << " " << x;
        EXPECT_GT(curve.Roc(std::min(x * 1.001, 1.0 - 1e-7)), y);
      } else {
        EXPECT_DOUBLE_EQ(y, x);
      }
    }
  }
}

// Self-duality of the Gaussian trade-off: R(1 - R(x)) = 1 - x. Where
// R(x) approaches 1 the complement 1 - R(x) keeps only absolute (not
// relative) precision, and that rounding is amplified by the curve's
// slope at the reflected point; the tolerance grants exactly that much.
TEST(Roc, AntiSymmetry) {
  for (double psi : {0.3, 1.0, 2.0, 4.0}) {
    const TradeoffCurve curve{SensitivityIndex(psi)};
    for (double x : {1e-6, 1e-3, 0.1, 0.4, 0.7, 0.95, 1.0 - 1e-6}) {
      const double complement = 1.0 - curve.Roc(x);
      if (complement <= 0.0) continue;  // saturated to the corner
      const double slope =
          std::exp(-psi * StdNormalQuantile(complement) - 0.5 * psi * psi);
      const double tol = std::max(1e-12, slope * 8e-16);
      EXPECT_NEAR(curve.Roc(complement), 1.0 - x, tol) << psi << " " << x;
    }
  }
}

TEST(Auc, LimitsAndClosedForm) {
  EXPECT_DOUBLE_EQ(TradeoffCurve{SensitivityIndex(0.0)}.Auc(), 0.5);
  EXPECT_NEAR(TradeoffCurve{SensitivityIndex(38.0 * std::sqrt(2.0))}.Auc(),
              1.0, 1e-15);
  EXPECT_NEAR(TradeoffCurve{SensitivityIndex(std::sqrt(2.0))}.Auc(),
              testref::kStdNormalCdfAt1, 1e-15);
}

TEST(Auc, MatchesOracleGrid) {
  constexpr int n = sizeof(testref::kAucPsiGrid) / sizeof(double);
  for (int i = 0; i < n; ++i) {
    EXPECT_NEAR(TradeoffCurve{SensitivityIndex(testref::kAucPsiGrid[i])}.Auc(),
                testref::kAucAtPsiGrid[i], 1e-15)
        << testref::kAucPsiGrid[i];
  }
}

TEST(AucByQuadrature, AgreesWithClosedForm) {
  EXPECT_NEAR(TradeoffCurve{SensitivityIndex(0.0)}.AucByQuadrature(), 0.5,
              1e-12);
  constexpr int n = sizeof(testref::kAucPsiGrid) / sizeof(double);
  for (int i = 0; i < n; ++i) {
    const TradeoffCurve curve{SensitivityIndex(testref::kAucPsiGrid[i])};
    EXPECT_NEAR(curve.AucByQuadrature(), testref::kAucAtPsiGrid[i], 1e-8)
        << testref::kAucPsiGrid[i];
    EXPECT_NEAR(curve.AucByQuadrature(), curve.Auc(), 1e-8)
        << testref::kAucPsiGrid[i];
  }
}

TEST(OperatingPointAt, ExtremeThresholds) {
  const GaussianMechanismParams params{2.0, 1.0};
  const OperatingPoint none = OperatingPointAt(params, 44.0);
  EXPECT_NEAR(none.fpr, 0.0, 1e-300);
  EXPECT_NEAR(none.tpr, 0.0, 1e-300);
  const OperatingPoint all = OperatingPointAt(params, -44.0);
  EXPECT_DOUBLE_EQ(all.fpr, 1.0);
  EXPECT_DOUBLE_EQ(all.tpr, 1.0);
}

TEST(OperatingPointAt, SymmetricThreshold) {
  // psi = 2, cut at half the sensitivity.
  const OperatingPoint point = OperatingPointAt({2.0, 1.0}, 1.0);
  EXPECT_NEAR(point.tpr, testref::kStdNormalCdfAt1, 1e-14);
  EXPECT_NEAR(point.fpr, 1.0 - testref::kStdNormalCdfAt1, 1e-14);
  EXPECT_DOUBLE_EQ(point.threshold, 1.0);
}

TEST(OperatingPointAt, LiesOnTheCurve) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> cs(-3.0, 5.0);
  const GaussianMechanismParams params{1.5, 0.75};
  const TradeoffCurve curve{SensitivityIndex::FromParams(params)};
  for (int i = 0; i < 200; ++i) {
    const OperatingPoint point = OperatingPointAt(params, cs(rng));
    ASSERT_GT(point.fpr, 0.0);
    ASSERT_LT(point.fpr, 1.0);
    EXPECT_LE(point.fpr, point.tpr);
    EXPECT_NEAR(curve.Roc(point.fpr), point.tpr, 1e-13);
  }
}

TEST(TangentIntercept, MatchesTightDeltaOnGrid) {
  for (double psi : {0.5, 1.0, 2.0, 4.0}) {
    for (double eps : {0.0, 0.5, 1.0, 2.0, 5.0}) {
      const SensitivityIndex index(psi);
      const TangentResult tangent =
          TradeoffCurve{index}.TangentIntercept(eps);
      EXPECT_NEAR(tangent.intercept, DeltaOfEpsilon(index, eps), 1e-10)
          << psi << " " << eps;
      EXPECT_DOUBLE_EQ(tangent.tangency_y,
                       PrivacyLossTailProbability(index, eps));
    }
  }
}

TEST(TangentIntercept, SpotValuesPsi2Eps2) {
  const TangentResult tangent =
      TradeoffCurve{SensitivityIndex(2.0)}.TangentIntercept(2.0);
  EXPECT_NEAR(tangent.tangency_x, testref::kStdNormalCdfAtMinus2,
              1e-14 * testref::kStdNormalCdfAtMinus2);
  EXPECT_DOUBLE_EQ(tangent.tangency_y, 0.5);
  EXPECT_NEAR(tangent.intercept, testref::kTangentInterceptPsi2Eps2, 1e-12);
}

TEST(TangentIntercept, TangencyPointIsOnTheCurve) {
  for (double psi : {0.5, 1.0, 3.0}) {
    for (double eps : {0.0, 1.0, 4.0}) {
      const TradeoffCurve curve{SensitivityIndex(psi)};
      const TangentResult tangent = curve.TangentIntercept(eps);
      EXPECT_NEAR(curve.Roc(tangent.tangency_x), tangent.tangency_y, 1e-13)
          << psi << " " << eps;
    }
  }
}

TEST(TangentIntercept, LineStaysOnOrAboveTheCurve) {
  for (double psi : {0.5, 1.0, 2.0}) {
    for (double eps : {0.0, 0.5, 2.0}) {
      const TradeoffCurve curve{SensitivityIndex(psi)};
      const TangentResult tangent = curve.TangentIntercept(eps);
      const double slope = std::exp(eps);
      for (int i = 1; i < 400; ++i) {
        const double x = i / 400.0;
        EXPECT_LE(curve.Roc(x), slope * x + tangent.intercept + 1e-12)
            << psi << " " << eps << " " << x;
      }
    }
  }
}

// Reflecting the slope-e^eps tangent about y = 1 - x gives the
// slope-e^(-eps) tangent: the reflected line touches the curve at the
// reflected tangency point and stays above it elsewhere.
TEST(TangentIntercept, ReflectionGivesTheInverseSlopeTangent) {
  for (double psi : {0.5, 1.0, 2.0}) {
    for (double eps : {0.3, 1.0, 2.0}) {
      const TradeoffCurve curve{SensitivityIndex(psi)};
      const TangentResult tangent = curve.TangentIntercept(eps);
      const double slope = std::exp(-eps);
      const double intercept =
          1.0 - std::exp(-eps) * (1.0 - tangent.intercept);
      const double rx = 1.0 - tangent.tangency_y;
      const double ry = 1.0 - tangent.tangency_x;
      EXPECT_NEAR(slope * rx + intercept, ry, 1e-12) << psi << " " << eps;
      EXPECT_NEAR(curve.Roc(rx), ry, 1e-12) << psi << " " << eps;
      for (int i = 1; i < 200; ++i) {
        const double x = i / 200.0;
        EXPECT_LE(curve.Roc(x), slope * x + intercept + 1e-12)
            << psi << " " << eps << " " << x;
      }
    }
  }
}

TEST(TangentIntercept, DegenerateCurveThrows) {
  EXPECT_THROW(TradeoffCurve{SensitivityIndex(0.0)}.TangentIntercept(1.0),
               DomainError);
  EXPECT_THROW(TradeoffCurve{SensitivityIndex(1.0)}.TangentIntercept(-1.0),
               DomainError);
}

}  // namespace
}  // namespace gaussdp
