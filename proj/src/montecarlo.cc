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

#include "gaussdp/montecarlo.h"

#include <cmath>
#include <random>

#include "gaussdp/errors.h"

namespace gaussdp {
namespace {

constexpr double kTwoPi = 6.28318530717958647692;

// Independent standard normal pairs via Box-Muller on mt19937_64 output.
// Exactly two uniforms per pair, so the stream position is a pure
// function of how many pairs have been drawn.
class NormalPairSource {
 public:
  explicit NormalPairSource(std::uint64_t seed) : engine_(seed) {}

  std::pair<double, double> Next() {
    const double u1 = NextUnit();
    const double u2 = NextUnit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return {radius * std::cos(kTwoPi * u2), radius * std::sin(kTwoPi * u2)};
  }

 private:
  // Uniform on the open interval (0,1); never 0, so log(u1) is finite.
  double NextUnit() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::mt19937_64 engine_;
};

void CheckSamples(const McConfig& config) {
  if (config.samples < 1) {
    throw DomainError("sample count must be at least 1");
  }
}

void CheckPositiveIndex(const McConfig& config) {
  if (config.psi.value() == 0.0) {
    throw DomainError(
        "the log-likelihood ratio degenerates at psi = 0; nothing to sample");
  }
}

McEstimate ProportionEstimate(double hits, std::uint64_t n) {
  const double value = hits / static_cast<double>(n);
  const double std_error =
      std::sqrt(value * (1.0 - value) / static_cast<double>(n));
  return {value, std_error, n};
}

// Log-likelihood ratio of observing `output` under the shifted input
// (center psi) versus the centered one, unit noise scale.
double LogLikelihoodRatio(double output, double psi) {
  const double shifted = output - psi;
  return 0.5 * output * output - 0.5 * shifted * shifted;
}

}  // namespace

McEstimate McAuc(const McConfig& config) {
  CheckSamples(config);
  const double psi = config.psi.value();
  NormalPairSource source(config.seed);
  double hits = 0.0;
  for (std::uint64_t i = 0; i < config.samples; ++i) {
    const auto [z0, z1] = source.Next();
    const double centered = z0;
    const double shifted = psi + z1;
    if (shifted > centered) {
      hits += 1.0;
    } else if (shifted == centered) {
      hits += 0.5;
    }
  }
  return ProportionEstimate(hits, config.samples);
}

std::pair<McEstimate, McEstimate> McOperatingPoint(const McConfig& config,
                                                   double threshold) {
  CheckSamples(config);
  if (!std::isfinite(threshold)) {
    throw DomainError("threshold must be finite");
  }
  const double psi = config.psi.value();
  NormalPairSource source(config.seed);
  double false_positives = 0.0;
  double true_positives = 0.0;
  for (std::uint64_t i = 0; i < config.samples; ++i) {
    const auto [z0, z1] = source.Next();
    if (z0 >= threshold) false_positives += 1.0;
    if (psi + z1 >= threshold) true_positives += 1.0;
  }
  return {ProportionEstimate(false_positives, config.samples),
          ProportionEstimate(true_positives, config.samples)};
}

McEstimate McPrivacyLossTail(const McConfig& config, double epsilon) {
  CheckSamples(config);
  CheckPositiveIndex(config);
  if (!std::isfinite(epsilon)) {
    throw DomainError("epsilon must be finite");
  }
  const double psi = config.psi.value();
  NormalPairSource source(config.seed);
  double hits = 0.0;
  std::uint64_t produced = 0;
  while (produced < config.samples) {
    const auto [z0, z1] = source.Next();
    for (const double z : {z0, z1}) {
      if (produced == config.samples) break;
      ++produced;
      if (LogLikelihoodRatio(psi + z, psi) >= epsilon) hits += 1.0;
    }
  }
  return ProportionEstimate(hits, config.samples);
}

McMoments McPrivacyLossMoments(const McConfig& config) {
  CheckSamples(config);
  CheckPositiveIndex(config);
  if (config.samples < 2) {
    throw DomainError("moment estimation needs at least two samples");
  }
  const double psi = config.psi.value();
  NormalPairSource source(config.seed);
  // Welford accumulation: deterministic single pass.
  double mean = 0.0;
  double m2 = 0.0;
  std::uint64_t produced = 0;
  while (produced < config.samples) {
    const auto [z0, z1] = source.Next();
    for (const double z : {z0, z1}) {
      if (produced == config.samples) break;
      ++produced;
      const double omega = LogLikelihoodRatio(psi + z, psi);
      const double delta = omega - mean;
      mean += delta / static_cast<double>(produced);
      m2 += delta * (omega - mean);
    }
  }
  const double n = static_cast<double>(config.samples);
  const double variance = m2 / (n - 1.0);
  const McEstimate mean_estimate{mean, std::sqrt(variance / n),
                                 config.samples};
  // Standard error of the sample variance under normality.
  const McEstimate variance_estimate{
      variance, variance * std::sqrt(2.0 / (n - 1.0)), config.samples};
  return {mean_estimate, variance_estimate};
}

}  // namespace gaussdp
