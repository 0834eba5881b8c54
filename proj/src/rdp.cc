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

#include "gaussdp/rdp.h"

#include <cmath>
#include <limits>
#include <vector>

#include "gaussdp/errors.h"
#include "gaussdp/solver.h"

namespace gaussdp {
namespace {

constexpr double kAlphaGridLo = 1.0 + 1e-4;
constexpr double kAlphaGridHi = 1024.0;
constexpr int kAlphaGridPoints = 200;

void CheckConversionDelta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError(
        "RDP conversion undefined outside 0 < delta < 1: the conversion "
        "formulas involve log(delta) and divide by it at the boundary");
  }
}

void CheckAlphaAboveOne(double alpha) {
  if (!(std::isfinite(alpha) && alpha > 1.0)) {
    throw DomainError("Renyi order must be finite and greater than 1");
  }
}

}  // namespace

RdpPoint RdpCurve(SensitivityIndex psi, double alpha) {
  if (!(std::isfinite(alpha) && alpha >= 1.0)) {
    throw DomainError("Renyi order must be finite and at least 1");
  }
  return {alpha, 0.5 * alpha * psi.value() * psi.value()};
}

double GaussianRenyiDivergence(std::span<const double> mean_i, double sigma_i,
                               std::span<const double> mean_j, double sigma_j,
                               double alpha) {
  CheckAlphaAboveOne(alpha);
  if (mean_i.size() != mean_j.size() || mean_i.empty()) {
    throw DomainError("means must be nonempty and of equal dimension");
  }
  if (!(std::isfinite(sigma_i) && sigma_i > 0.0 &&
        std::isfinite(sigma_j) && sigma_j > 0.0)) {
    throw DomainError("scales must be finite and positive");
  }
  const double mixed_var =
      alpha * sigma_j * sigma_j + (1.0 - alpha) * sigma_i * sigma_i;
  if (!(mixed_var > 0.0)) {
    throw DomainError(
        "divergence is infinite: alpha*sigma_j^2 + (1-alpha)*sigma_i^2 <= 0");
  }
  double sq_distance = 0.0;
  for (std::size_t k = 0; k < mean_i.size(); ++k) {
    const double diff = mean_i[k] - mean_j[k];
    sq_distance += diff * diff;
  }
  const double dim = static_cast<double>(mean_i.size());
  return dim * std::log(sigma_j / sigma_i) +
         dim / (2.0 * (alpha - 1.0)) *
             std::log(sigma_j * sigma_j / mixed_var) +
         0.5 * alpha * sq_distance / mixed_var;
}

double RdpToDpStandard(SensitivityIndex psi, double alpha, double delta) {
  CheckAlphaAboveOne(alpha);
  CheckConversionDelta(delta);
  return RdpCurve(psi, alpha).rho + std::log(1.0 / delta) / (alpha - 1.0);
}

double RdpToDpImproved(SensitivityIndex psi, double alpha, double delta) {
  CheckAlphaAboveOne(alpha);
  CheckConversionDelta(delta);
  return RdpCurve(psi, alpha).rho + std::log((alpha - 1.0) / alpha) -
         (std::log(delta) + std::log(alpha)) / (alpha - 1.0);
}

ConversionResult OptimalAlphaConversion(SensitivityIndex psi, double delta,
                                        ConversionMethod method) {
  CheckConversionDelta(delta);
  if (method != ConversionMethod::kRdpStandard &&
      method != ConversionMethod::kRdpImproved) {
    throw DomainError("optimal-alpha search applies to the RDP methods only");
  }
  auto conversion = [&](double alpha) {
    return method == ConversionMethod::kRdpStandard
               ? RdpToDpStandard(psi, alpha, delta)
               : RdpToDpImproved(psi, alpha, delta);
  };

  if (psi.value() == 0.0) {
    // The curve is flat at rho = 0 and the conversion decays toward its
    // infimum as alpha grows without bound.
    return {0.0, std::numeric_limits<double>::infinity(), method};
  }

  const double log_lo = std::log(kAlphaGridLo);
  const double log_hi = std::log(kAlphaGridHi);
  std::vector<double> grid(kAlphaGridPoints);
  for (int i = 0; i < kAlphaGridPoints; ++i) {
    grid[i] = std::exp(log_lo + (log_hi - log_lo) * i /
                                    (kAlphaGridPoints - 1));
  }
  int best = 0;
  double best_eps = conversion(grid[0]);
  for (int i = 1; i < kAlphaGridPoints; ++i) {
    const double eps = conversion(grid[i]);
    if (eps < best_eps) {
      best_eps = eps;
      best = i;
    }
  }
  const double lo = grid[best > 0 ? best - 1 : 0];
  const double hi = grid[best < kAlphaGridPoints - 1 ? best + 1
                                                     : kAlphaGridPoints - 1];
  auto [alpha_star, epsilon] = GoldenMinimize(conversion, lo, hi);
  if (best_eps < epsilon) {
    epsilon = best_eps;
    alpha_star = grid[best];
  }
  return {epsilon > 0.0 ? epsilon : 0.0, alpha_star, method};
}

}  // namespace gaussdp
