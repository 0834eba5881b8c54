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

#include "gaussdp/solver.h"

#include <cmath>

namespace gaussdp {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Newton iteration on the Legendre three-term recurrence. Nodes come out
// accurate to ~1 ulp, which the degree-(2n-1) exactness tests confirm.
std::vector<QuadratureNode> ComputeRule(int n) {
  std::vector<QuadratureNode> rule(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double derivative = 0.0;
    for (int step = 0; step < 100; ++step) {
      double p_curr = 1.0, p_prev = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p_old = p_prev;
        p_prev = p_curr;
        p_curr = ((2.0 * j + 1.0) * z * p_prev - j * p_old) / (j + 1.0);
      }
      derivative = n * (z * p_curr - p_prev) / (z * z - 1.0);
      const double z_next = z - p_curr / derivative;
      const bool converged = std::fabs(z_next - z) <= 1e-15;
      z = z_next;
      if (converged) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * derivative * derivative);
    rule[i] = {-z, w};
    rule[n - 1 - i] = {z, w};
  }
  return rule;
}

}  // namespace

const std::vector<QuadratureNode>& GaussLegendreRule(int nodes) {
  if (nodes < 1) {
    throw DomainError("quadrature needs at least one node");
  }
  if (nodes == 129) {
    static const std::vector<QuadratureNode>* kRule129 =
        new std::vector<QuadratureNode>(ComputeRule(129));
    return *kRule129;
  }
  thread_local std::vector<QuadratureNode> rule;
  thread_local int cached_nodes = 0;
  if (cached_nodes != nodes) {
    rule = ComputeRule(nodes);
    cached_nodes = nodes;
  }
  return rule;
}

}  // namespace gaussdp
