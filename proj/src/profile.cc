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

#include "gaussdp/profile.h"

#include <cmath>
#include <limits>

#include "gaussdp/errors.h"
#include "gaussdp/normal.h"
#include "gaussdp/solver.h"

namespace gaussdp {
namespace {

// Below this target the solver compares log(delta) instead of delta.
constexpr double kLogSpaceDeltaThreshold = 1e-250;

void CheckEpsilon(double epsilon) {
  if (!(std::isfinite(epsilon) && epsilon >= 0.0)) {
    throw DomainError("epsilon must be finite and nonnegative");
  }
}

void CheckDeltaTarget(double delta) {
  if (std::isnan(delta) || delta >= 1.0) {
    throw DomainError("delta must lie in (0,1)");
  }
  if (delta <= 0.0) {
    throw UnsatisfiableError(
        "no finite epsilon satisfies delta <= 0 for the Gaussian mechanism");
  }
}

}  // namespace

double DeltaOfEpsilon(SensitivityIndex psi, double epsilon) {
  CheckEpsilon(epsilon);
  const double p = psi.value();
  if (p == 0.0) return 0.0;
  const double x1 = 0.5 * p - epsilon / p;
  const double x2 = -0.5 * p - epsilon / p;
  const double t1 = StdNormalCdf(x1);
  double t2;
  if (epsilon < 700.0 && x2 > -37.0) {
    t2 = std::exp(epsilon) * StdNormalCdf(x2);
  } else {
    // Either factor alone may overflow/underflow; the product never
    // exceeds t1 <= 1, so form it in log space.
    t2 = std::exp(epsilon + LogStdNormalCdf(x2));
  }
  const double delta = t1 - t2;
  return delta > 0.0 ? delta : 0.0;
}

double LogDeltaOfEpsilon(SensitivityIndex psi, double epsilon) {
  CheckEpsilon(epsilon);
  const double p = psi.value();
  if (p == 0.0) {
    throw DomainError("log delta is undefined at psi = 0");
  }
  const double l1 = LogStdNormalCdf(0.5 * p - epsilon / p);
  const double l2 = epsilon + LogStdNormalCdf(-0.5 * p - epsilon / p);
  const double ratio = l2 - l1;  // < 0 mathematically
  if (ratio >= 0.0) {
    return -std::numeric_limits<double>::infinity();
  }
  return l1 + std::log1p(-std::exp(ratio));
}

ProfilePoint ProfilePointAt(SensitivityIndex psi, double epsilon) {
  return {epsilon, DeltaOfEpsilon(psi, epsilon)};
}

double EpsilonOfDelta(SensitivityIndex psi, double delta) {
  CheckDeltaTarget(delta);
  if (psi.value() == 0.0) return 0.0;
  if (DeltaOfEpsilon(psi, 0.0) <= delta) return 0.0;

  const bool log_space = delta < kLogSpaceDeltaThreshold;
  const double log_target = std::log(delta);
  auto objective = [&](double eps) {
    if (!log_space) return DeltaOfEpsilon(psi, eps) - delta;
    double log_delta = LogDeltaOfEpsilon(psi, eps);
    // -inf only occurs past total underflow; a large finite surrogate
    // keeps Brent's interpolation arithmetic well defined.
    if (std::isinf(log_delta)) log_delta = -1e15;
    return log_delta - log_target;
  };

  double lo = 0.0;
  double hi = 1.0;
  double f_lo = objective(lo);
  double f_hi = objective(hi);
  int doublings = 0;
  while (f_hi > 0.0) {
    if (++doublings > 64) {
      throw ConvergenceError("failed to bracket epsilon", hi);
    }
    lo = hi;
    f_lo = f_hi;
    hi *= 2.0;
    f_hi = objective(hi);
  }
  return BrentRoot(objective, Bracket{lo, hi, f_lo, f_hi}, kRootDefaults);
}

double TailBoundEpsilon(SensitivityIndex psi, double delta) {
  if (std::isnan(delta) || delta <= 0.0 || delta >= 1.0) {
    throw DomainError("delta must lie in (0,1)");
  }
  const double p = psi.value();
  if (p == 0.0) {
    throw DomainError("tail bound requires psi > 0");
  }
  const double eps = 0.5 * p * p - p * StdNormalQuantile(delta);
  return eps > 0.0 ? eps : 0.0;
}

CalibrationResult CalibrateSigma(double sensitivity, double epsilon,
                                 double delta) {
  if (!(std::isfinite(sensitivity) && sensitivity > 0.0)) {
    throw DomainError("sensitivity must be finite and positive");
  }
  CheckEpsilon(epsilon);
  CheckDeltaTarget(delta);

  // delta(psi, epsilon) is strictly increasing in psi; the smallest sigma
  // corresponds to the largest index still meeting the target.
  auto objective = [&](double p) {
    return DeltaOfEpsilon(SensitivityIndex(p), epsilon) - delta;
  };

  double lo = 1.0, hi = 1.0;
  double f_lo = objective(1.0), f_hi = f_lo;
  int steps = 0;
  while (f_hi <= 0.0) {
    if (++steps > 64) throw ConvergenceError("failed to bracket index", hi);
    lo = hi;
    f_lo = f_hi;
    hi *= 2.0;
    f_hi = objective(hi);
  }
  steps = 0;
  while (f_lo > 0.0) {
    if (++steps > 1024) throw ConvergenceError("failed to bracket index", lo);
    hi = lo;
    f_hi = f_lo;
    lo *= 0.5;
    f_lo = objective(lo);
  }

  const SolverConfig config{lo * 1e-10, 200};
  double index = BrentRoot(objective, Bracket{lo, hi, f_lo, f_hi}, config);
  // Brent stops within tolerance of the boundary, possibly on the
  // unsatisfied side; walk down until the target is actually met so the
  // postcondition holds exactly. Total movement stays ~2x the tolerance.
  double step = config.abs_tol;
  while (objective(index) > 0.0) {
    index -= step;
    step *= 2.0;
  }
  const double achieved = DeltaOfEpsilon(SensitivityIndex(index), epsilon);
  return {sensitivity / index, achieved};
}

}  // namespace gaussdp
