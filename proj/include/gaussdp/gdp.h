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

#ifndef GAUSSDP_GDP_H_
#define GAUSSDP_GDP_H_

#include <optional>
#include <span>
#include <string>

#include "gaussdp/mechanism.h"

namespace gaussdp {

// The mu of a mu-Gaussian-DP guarantee.
class GdpParameter {
 public:
  // Throws DomainError unless mu is finite and nonnegative.
  explicit GdpParameter(double mu);

  double value() const { return mu_; }

 private:
  double mu_;
};

// Gaussian trade-off function G_mu: the smallest Type-II error any test
// distinguishing N(0,1) from N(mu,1) can achieve at Type-I error alpha.
double GdpTradeoff(GdpParameter mu, double alpha);

// A mechanism with index psi is psi-GDP, hence mu-GDP exactly when
// psi <= mu.
bool SatisfiesGdp(SensitivityIndex psi, GdpParameter mu);

// Guarantee for groups of k individuals: k * psi.
SensitivityIndex GroupPrivacy(SensitivityIndex psi, int group_size);

// n-fold composition: the Euclidean norm of the indices. Squares are
// accumulated in ascending order so permutations of the input give
// bit-identical results.
SensitivityIndex Compose(std::span<const SensitivityIndex> parts);

// One run of noisy SGD: `steps` iterations over uniformly subsampled
// batches with sampling rate `sampling_rate` and noise multiplier `sigma`.
struct DpSgdConfig {
  double sigma = 0.0;
  double sampling_rate = 0.0;
  long long steps = 0;
};

// Closed-form asymptotic index of the whole run, with s = rate * sqrt(T):
//   psi = s * sqrt(2) * sqrt(exp(1/sigma^2) Phi(3/(2 sigma))
//                            + 3 Phi(-1/(2 sigma)) - 2).
// The formula is a large-database, many-iterations limit; see
// DpSgdAsymptoticsWarning for when it is being stretched.
SensitivityIndex DpSgdPsi(const DpSgdConfig& config);

// EpsilonOfDelta applied to DpSgdPsi.
double DpSgdEpsilon(const DpSgdConfig& config, double delta);

// Non-empty when the asymptotic formula is applied outside its comfort
// zone (steps < 100 or sampling_rate > 0.1).
std::optional<std::string> DpSgdAsymptoticsWarning(const DpSgdConfig& config);

}  // namespace gaussdp

#endif  // GAUSSDP_GDP_H_
