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

#ifndef GAUSSDP_PROFILE_H_
#define GAUSSDP_PROFILE_H_

#include "gaussdp/mechanism.h"

namespace gaussdp {

// One point on the privacy profile: the mechanism satisfies
// (epsilon, delta)-DP.
struct ProfilePoint {
  double epsilon = 0.0;
  double delta = 0.0;
};

struct CalibrationResult {
  double sigma = 0.0;
  double achieved_delta = 0.0;
};

// Tight delta(epsilon) of the Gaussian mechanism:
//   delta = Phi(psi/2 - eps/psi) - e^eps * Phi(-psi/2 - eps/psi).
// Both CDF terms are evaluated tail-safe and the e^eps product moves to
// log space once either factor leaves the normal double range, so the
// curve stays meaningful down to the underflow limit of delta itself.
double DeltaOfEpsilon(SensitivityIndex psi, double epsilon);

// log of the above, usable long after DeltaOfEpsilon underflows to 0.
// Requires psi > 0.
double LogDeltaOfEpsilon(SensitivityIndex psi, double epsilon);

ProfilePoint ProfilePointAt(SensitivityIndex psi, double epsilon);

// Smallest epsilon >= 0 with DeltaOfEpsilon(psi, epsilon) <= delta, found
// by doubling an upper bound and running Brent to 1e-12 absolute. Exactly
// 0 when delta is already met at epsilon = 0. For targets below 1e-250 the
// satisfaction test runs on LogDeltaOfEpsilon.
// Throws UnsatisfiableError for delta <= 0 (no finite epsilon reaches
// delta = 0) and DomainError for delta >= 1.
double EpsilonOfDelta(SensitivityIndex psi, double delta);

// Closed-form epsilon from the single-tail bound:
//   max(0, psi^2/2 - psi * Phi^-1(delta)).
// Always at least EpsilonOfDelta; kept as the cheap, conservative answer.
double TailBoundEpsilon(SensitivityIndex psi, double delta);

// Smallest sigma with DeltaOfEpsilon(sensitivity/sigma, epsilon) <= delta,
// to 1e-9 relative. Solves in the index (the profile depends on the ratio
// only), so the result is exactly scale-equivariant in the sensitivity.
CalibrationResult CalibrateSigma(double sensitivity, double epsilon,
                                 double delta);

}  // namespace gaussdp

#endif  // GAUSSDP_PROFILE_H_
