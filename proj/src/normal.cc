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

#include "gaussdp/normal.h"

#include <cmath>

#include "gaussdp/errors.h"

namespace gaussdp {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
constexpr double kSqrtPi = 1.77245385090551602730;

void CheckFinite(double z) {
  if (!std::isfinite(z)) {
    throw DomainError("standard normal argument must be finite");
  }
}

// Scaled complement exp(x^2) * erfc(x) for x >= 0. Direct evaluation is
// exact enough until erfc approaches the subnormal range; past that an
// asymptotic expansion in 1/(2x^2) takes over.
double Erfcx(double x) {
  if (x < 25.0) {
    return std::exp(x * x) * std::erfc(x);
  }
  const double u = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 8; ++k) {
    term *= -(2 * k - 1) * u;
    sum += term;
  }
  return sum / (x * kSqrtPi);
}

// Acklam's rational approximation to the normal quantile, ~1e-9 relative
// accuracy; callers refine against the CDF.
double QuantileInitialEstimate(double p) {
  static constexpr double kA[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double kB[6] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01, 1.0};
  static constexpr double kC[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double kD[5] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00,
                                   1.0};
  constexpr double kPLow = 0.02425;

  auto poly = [](const double* c, int n, double x) {
    double r = 0.0;
    for (int i = 0; i < n; ++i) r = r * x + c[i];
    return r;
  };

  if (p < kPLow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return poly(kC, 6, q) / poly(kD, 5, q);
  }
  if (p <= 1.0 - kPLow) {
    const double q = p - 0.5;
    const double r = q * q;
    return poly(kA, 6, r) * q / poly(kB, 6, r);
  }
  const double q = std::sqrt(-2.0 * std::log1p(-p));
  return -poly(kC, 6, q) / poly(kD, 5, q);
}

}  // namespace

double StdNormalPdf(double z) {
  CheckFinite(z);
  return kInvSqrt2Pi * std::exp(-0.5 * z * z);
}

double StdNormalCdf(double z) {
  CheckFinite(z);
  return 0.5 * std::erfc(-z * kInvSqrt2);
}

double StdNormalCdfComplement(double z) {
  CheckFinite(z);
  return 0.5 * std::erfc(z * kInvSqrt2);
}

double LogStdNormalCdf(double z) {
  CheckFinite(z);
  if (z >= -0.5) {
    return std::log1p(-StdNormalCdfComplement(z));
  }
  const double x = -z * kInvSqrt2;
  return -0.5 * z * z + std::log(0.5 * Erfcx(x));
}

double StdNormalQuantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("quantile argument must lie strictly inside (0,1)");
  }
  double x = QuantileInitialEstimate(p);
  const double q = 1.0 - p;
  for (int i = 0; i < 2; ++i) {
    const double density = StdNormalPdf(x);
    if (density == 0.0) break;
    // Residual Phi(x) - p, taken from whichever tail avoids cancellation.
    const double err =
        (p <= 0.5) ? StdNormalCdf(x) - p : q - StdNormalCdfComplement(x);
    const double u = err / density;
    x -= u / (1.0 + 0.5 * x * u);  // Halley step; Phi'' = -x * phi
  }
  return x;
}

}  // namespace gaussdp
