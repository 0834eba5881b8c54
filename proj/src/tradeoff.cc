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

#include "gaussdp/errors.h"
#include "gaussdp/normal.h"
#include "gaussdp/solver.h"

namespace gaussdp {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Quadrature runs over x in [Phi(-kQuadratureZ), Phi(kQuadratureZ)];
// both clipped endpoint strips contribute below 1e-15 to the area.
constexpr double kQuadratureZ = 8.0;
constexpr int kQuadratureNodes = 129;

}  // namespace

double TradeoffCurve::Roc(double x) const {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("false-positive rate must lie strictly inside (0,1)");
  }
  if (psi_.value() == 0.0) return x;  // exact identity
  return StdNormalCdf(psi_.value() + StdNormalQuantile(x));
}

double TradeoffCurve::Auc() const {
  return StdNormalCdf(psi_.value() * kInvSqrt2);
}

double TradeoffCurve::AucByQuadrature() const {
  // Integrate R over the clamped unit interval through the substitution
  // x = Phi(z), which concentrates nodes in the corners where the curve
  // actually moves; direct nodes on (0,1) cannot resolve the boundary
  // layer at high indices.
  const double area = GaussLegendre(
      [this](double z) { return Roc(StdNormalCdf(z)) * StdNormalPdf(z); },
      -kQuadratureZ, kQuadratureZ, kQuadratureNodes);
  // The clipped strip [Phi(kQuadratureZ), 1] integrates R ~= 1.
  return area + StdNormalCdfComplement(kQuadratureZ);
}

TangentResult TradeoffCurve::TangentIntercept(double epsilon) const {
  if (!(std::isfinite(epsilon) && epsilon >= 0.0)) {
    throw DomainError("epsilon must be finite and nonnegative");
  }
  const double p = psi_.value();
  if (p == 0.0) {
    throw DomainError(
        "the diagonal curve at psi = 0 has no slope-e^epsilon tangent");
  }
  // R'(x0) = e^epsilon at Phi^-1(x0) = -epsilon/psi - psi/2.
  const double z0 = -epsilon / p - 0.5 * p;
  const double x0 = StdNormalCdf(z0);
  const double y0 = StdNormalCdf(0.5 * p - epsilon / p);
  double slope_times_x0;
  if (epsilon < 700.0 && z0 > -37.0) {
    slope_times_x0 = std::exp(epsilon) * x0;
  } else {
    slope_times_x0 = std::exp(epsilon + LogStdNormalCdf(z0));
  }
  return {epsilon, x0, y0, y0 - slope_times_x0};
}

OperatingPoint OperatingPointAt(const GaussianMechanismParams& params,
                                double threshold) {
  SensitivityIndex::FromParams(params);  // validates
  if (!std::isfinite(threshold)) {
    throw DomainError("threshold must be finite");
  }
  const double fpr = StdNormalCdfComplement(threshold / params.sigma);
  const double tpr = StdNormalCdfComplement(
      (threshold - params.sensitivity) / params.sigma);
  return {fpr, tpr, threshold};
}

}  // namespace gaussdp
