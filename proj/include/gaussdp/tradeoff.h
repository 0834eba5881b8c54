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

#ifndef GAUSSDP_TRADEOFF_H_
#define GAUSSDP_TRADEOFF_H_

#include "gaussdp/mechanism.h"

namespace gaussdp {

// One point of the distinguishing game at a fixed decision threshold.
// Orientation convention used throughout: the null distribution is the
// mechanism output centered at 0, the alternative is centered at
// +sensitivity, and the test decides "alternative" when output >= c.
// Sweeping c from +inf to -inf traces (fpr, tpr) from (0,0) to (1,1).
struct OperatingPoint {
  double fpr = 0.0;
  double tpr = 0.0;
  double threshold = 0.0;
};

// Tangent of slope e^epsilon to the worst-case ROC curve. tangency_y is
// the single-tail privacy-loss probability at epsilon; intercept is the
// line's y-intercept, which equals the tight DeltaOfEpsilon.
struct TangentResult {
  double epsilon = 0.0;
  double tangency_x = 0.0;
  double tangency_y = 0.0;
  double intercept = 0.0;
};

// Worst-case ROC curve R(x) = Phi(psi + Phi^-1(x)) of the optimal
// likelihood-ratio adversary distinguishing adjacent inputs.
class TradeoffCurve {
 public:
  explicit TradeoffCurve(SensitivityIndex psi) : psi_(psi) {}

  SensitivityIndex index() const { return psi_; }

  // True-positive rate at false-positive rate x in (0,1).
  double Roc(double x) const;

  // Area under the curve in closed form: Phi(psi / sqrt(2)).
  double Auc() const;

  // The same area by 129-node Gauss-Legendre quadrature of the curve,
  // endpoint-clamped; agrees with Auc() to well under 1e-8. Kept as an
  // independent route for verification.
  double AucByQuadrature() const;

  // Tangency point and intercept of the slope-e^epsilon tangent, from the
  // closed-form derivative R'(x) = exp(-psi * Phi^-1(x) - psi^2/2).
  // Throws DomainError at psi = 0 (the curve degenerates to the diagonal).
  TangentResult TangentIntercept(double epsilon) const;

 private:
  SensitivityIndex psi_;
};

OperatingPoint OperatingPointAt(const GaussianMechanismParams& params,
                                double threshold);

}  // namespace gaussdp

#endif  // GAUSSDP_TRADEOFF_H_
