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

#include "gaussdp/gdp.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gaussdp/errors.h"
#include "gaussdp/normal.h"
#include "gaussdp/profile.h"

namespace gaussdp {
namespace {

void CheckConfig(const DpSgdConfig& config) {
  if (!(std::isfinite(config.sigma) && config.sigma > 0.0)) {
    throw DomainError("noise multiplier must be finite and positive");
  }
  if (!(config.sampling_rate > 0.0 && config.sampling_rate <= 1.0)) {
    throw DomainError("sampling rate must lie in (0,1]");
  }
  if (config.steps < 1) {
    throw DomainError("step count must be at least 1");
  }
}

}  // namespace

GdpParameter::GdpParameter(double mu) : mu_(mu) {
  if (!(std::isfinite(mu) && mu >= 0.0)) {
    throw DomainError("GDP parameter must be finite and nonnegative");
  }
}

double GdpTradeoff(GdpParameter mu, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("Type-I error must lie strictly inside (0,1)");
  }
  return StdNormalCdf(StdNormalQuantile(1.0 - alpha) - mu.value());
}

bool SatisfiesGdp(SensitivityIndex psi, GdpParameter mu) {
  return psi.value() <= mu.value();
}

SensitivityIndex GroupPrivacy(SensitivityIndex psi, int group_size) {
  if (group_size < 1) {
    throw DomainError("group size must be at least 1");
  }
  return SensitivityIndex(group_size * psi.value());
}

SensitivityIndex Compose(std::span<const SensitivityIndex> parts) {
  if (parts.empty()) {
    throw DomainError("composition of an empty list is undefined");
  }
  std::vector<double> squares;
  squares.reserve(parts.size());
  for (const SensitivityIndex& part : parts) {
    squares.push_back(part.value() * part.value());
  }
  std::sort(squares.begin(), squares.end());
  double sum = 0.0;
  for (double sq : squares) sum += sq;
  return SensitivityIndex(std::sqrt(sum));
}

SensitivityIndex DpSgdPsi(const DpSgdConfig& config) {
  CheckConfig(config);
  const double sigma = config.sigma;
  const double s =
      config.sampling_rate * std::sqrt(static_cast<double>(config.steps));
  const double inner = std::exp(1.0 / (sigma * sigma)) *
                           StdNormalCdf(1.5 / sigma) +
                       3.0 * StdNormalCdf(-0.5 / sigma) - 2.0;
  if (!std::isfinite(inner)) {
    throw DomainError("noise multiplier too small for the asymptotic form");
  }
  // inner approaches 0 from above as sigma grows; rounding can land a hair
  // below it.
  return SensitivityIndex(s * std::sqrt(2.0 * std::max(inner, 0.0)));
}

double DpSgdEpsilon(const DpSgdConfig& config, double delta) {
  return EpsilonOfDelta(DpSgdPsi(config), delta);
}

std::optional<std::string> DpSgdAsymptoticsWarning(const DpSgdConfig& config) {
  CheckConfig(config);
  if (config.steps >= 100 && config.sampling_rate <= 0.1) {
    return std::nullopt;
  }
  return "the closed-form accountant is asymptotic in the iteration count "
         "and database size; with steps < 100 or sampling rate > 0.1 the "
         "reported index may understate the true privacy loss";
}

}  // namespace gaussdp
