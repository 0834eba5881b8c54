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

#include "gaussdp/errors.h"
#include "gaussdp/normal.h"

namespace gaussdp {

SensitivityIndex::SensitivityIndex(double psi) : psi_(psi) {
  if (!(std::isfinite(psi) && psi >= 0.0)) {
    throw DomainError("sensitivity index must be finite and nonnegative");
  }
}

SensitivityIndex SensitivityIndex::FromParams(
    const GaussianMechanismParams& params) {
  if (!(std::isfinite(params.sensitivity) && params.sensitivity > 0.0)) {
    throw DomainError("sensitivity must be finite and positive");
  }
  if (!(std::isfinite(params.sigma) && params.sigma > 0.0)) {
    throw DomainError("sigma must be finite and positive");
  }
  return SensitivityIndex(params.sensitivity / params.sigma);
}

PrivacyLossDistribution PrivacyLossOf(SensitivityIndex psi) {
  const double p = psi.value();
  return {0.5 * p * p, p * p};
}

double PrivacyLossTailProbability(SensitivityIndex psi, double epsilon) {
  if (!(std::isfinite(epsilon) && epsilon >= 0.0)) {
    throw DomainError("epsilon must be finite and nonnegative");
  }
  const double p = psi.value();
  if (p == 0.0) {
    if (epsilon == 0.0) {
      throw DomainError(
          "privacy loss tail is undefined at psi = 0, epsilon = 0");
    }
    return 0.0;
  }
  return StdNormalCdf(0.5 * p - epsilon / p);
}

}  // namespace gaussdp
