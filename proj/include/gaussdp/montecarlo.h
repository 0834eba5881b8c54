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
//
// Monte-Carlo adversary simulator: samples mechanism outputs under
// adjacent inputs and estimates the quantities the closed forms predict.
// Estimates are bit-reproducible for a fixed config: the generator is a
// seeded mt19937_64 and normal variates come from the Box-Muller
// transform, which consumes a fixed number of uniforms per draw.

#ifndef GAUSSDP_MONTECARLO_H_
#define GAUSSDP_MONTECARLO_H_

#include <cstdint>
#include <utility>

#include "gaussdp/mechanism.h"

namespace gaussdp {

// Identifier of the sampling scheme, recorded in tool output.
inline constexpr char kMcRngAlgorithm[] = "mt19937_64/box-muller";

struct McConfig {
  SensitivityIndex psi;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// A proportion or moment estimate with its standard error. Proportions
// carry the binomial (Wald) error; tests use 3-sigma envelopes.
struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

struct McMoments {
  McEstimate mean;
  McEstimate variance;
};

// Rank estimate of the AUC: the fraction of sample pairs in which the
// shifted draw exceeds the centered draw, ties counted half.
McEstimate McAuc(const McConfig& config);

// Empirical (fpr, tpr) at a threshold, under the orientation convention
// of tradeoff.h.
std::pair<McEstimate, McEstimate> McOperatingPoint(const McConfig& config,
                                                   double threshold);

// Fraction of sampled outputs whose log-likelihood ratio reaches epsilon.
// Requires psi > 0 (the ratio degenerates otherwise).
McEstimate McPrivacyLossTail(const McConfig& config, double epsilon);

// Sample mean and variance of the log-likelihood ratio; expected to
// approach (psi^2/2, psi^2). Requires psi > 0 and at least two samples.
McMoments McPrivacyLossMoments(const McConfig& config);

}  // namespace gaussdp

#endif  // GAUSSDP_MONTECARLO_H_
