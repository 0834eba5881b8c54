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

#ifndef GAUSSDP_MECHANISM_H_
#define GAUSSDP_MECHANISM_H_

namespace gaussdp {

// Parameters of a Gaussian mechanism: a query with global L2-sensitivity
// `sensitivity` perturbed by isotropic normal noise of scale `sigma`.
struct GaussianMechanismParams {
  double sensitivity = 0.0;
  double sigma = 0.0;
};

// The unitless ratio sensitivity/sigma. Every privacy property of the
// Gaussian mechanism -- its (epsilon, delta) profile, trade-off curve,
// AUC and Renyi curve -- is a function of this one number. All quantities
// derived from it are worst-case over adjacent databases.
//
// Zero is admitted as the perfect-privacy degenerate case.
class SensitivityIndex {
 public:
  // Throws DomainError unless psi is finite and nonnegative.
  explicit SensitivityIndex(double psi);

  // Throws DomainError unless both parameters are finite and positive.
  static SensitivityIndex FromParams(const GaussianMechanismParams& params);

  double value() const { return psi_; }

  friend bool operator==(SensitivityIndex, SensitivityIndex) = default;

 private:
  double psi_;
};

// Distribution of the privacy loss random variable: the log-likelihood
// ratio of the mechanism's output under adjacent inputs is itself normal,
// with mean psi^2/2 and variance psi^2.
struct PrivacyLossDistribution {
  double mean = 0.0;
  double variance = 0.0;
};

PrivacyLossDistribution PrivacyLossOf(SensitivityIndex psi);

// P(privacy loss >= epsilon) = Phi(psi/2 - epsilon/psi). This single-tail
// probability upper-bounds delta but is looser than the tight profile in
// profile.h. For psi = 0 it is 0 when epsilon > 0 and undefined at
// epsilon = 0 (DomainError).
double PrivacyLossTailProbability(SensitivityIndex psi, double epsilon);

}  // namespace gaussdp

#endif  // GAUSSDP_MECHANISM_H_
