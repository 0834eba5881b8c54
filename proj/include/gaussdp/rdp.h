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

#ifndef GAUSSDP_RDP_H_
#define GAUSSDP_RDP_H_

#include <span>

#include "gaussdp/mechanism.h"

namespace gaussdp {

// A Renyi-DP guarantee: divergence of order alpha bounded by rho.
struct RdpPoint {
  double alpha = 0.0;
  double rho = 0.0;
};

enum class ConversionMethod {
  kProfile,
  kRdpStandard,
  kRdpImproved,
};

// Result of converting a guarantee to (epsilon, delta)-DP at fixed delta.
// alpha_star is meaningful for the RDP methods only; the degenerate
// psi = 0 case reports +infinity (the infimum is approached, not attained).
struct ConversionResult {
  double epsilon = 0.0;
  double alpha_star = 0.0;
  ConversionMethod method = ConversionMethod::kProfile;
};

// The mechanism's Renyi curve: rho(alpha) = (alpha/2) psi^2, tight for
// the Gaussian mechanism. alpha = 1 is admitted (KL case, by continuity).
RdpPoint RdpCurve(SensitivityIndex psi, double alpha);

// Order-alpha Renyi divergence from N(mean_i, sigma_i^2 I) to
// N(mean_j, sigma_j^2 I). Requires alpha > 1 and
// alpha sigma_j^2 + (1-alpha) sigma_i^2 > 0; outside that the divergence
// is infinite and a DomainError is thrown. With equal scales this reduces
// to (alpha/2) ||mean_i - mean_j||^2 / sigma^2.
double GaussianRenyiDivergence(std::span<const double> mean_i, double sigma_i,
                               std::span<const double> mean_j, double sigma_j,
                               double alpha);

// Standard conversion: epsilon = rho(alpha) + log(1/delta)/(alpha - 1).
double RdpToDpStandard(SensitivityIndex psi, double alpha, double delta);

// Tighter conversion:
//   epsilon = rho(alpha) + log((alpha-1)/alpha)
//             - (log(delta) + log(alpha)) / (alpha - 1).
// Dominates the standard conversion pointwise in alpha.
double RdpToDpImproved(SensitivityIndex psi, double alpha, double delta);

// Minimizes the chosen conversion over alpha: a 200-point log-spaced grid
// on [1 + 1e-4, 1024] locates the basin, golden-section refines it.
// Negative formula values (possible for tiny indices) clamp to 0, which
// is always a valid guarantee.
ConversionResult OptimalAlphaConversion(SensitivityIndex psi, double delta,
                                        ConversionMethod method);

}  // namespace gaussdp

#endif  // GAUSSDP_RDP_H_
