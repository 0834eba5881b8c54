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
// Deterministic scalar numerics shared by the profile and RDP modules.
// Callables are treated as opaque: no derivative information is used, and
// identical inputs always produce bit-identical results.

#ifndef GAUSSDP_SOLVER_H_
#define GAUSSDP_SOLVER_H_

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "gaussdp/errors.h"

namespace gaussdp {

struct SolverConfig {
  double abs_tol = 1e-12;
  int max_iter = 200;
};

inline constexpr SolverConfig kRootDefaults{1e-12, 200};
inline constexpr SolverConfig kMinimizeDefaults{1e-9, 200};

// A root bracket: f changes sign between lo and hi.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
};

// Evaluates f at both endpoints and checks for a sign change.
template <typename F>
Bracket MakeBracket(F&& f, double lo, double hi) {
  if (!(lo < hi)) {
    throw BracketError("bracket requires lo < hi");
  }
  Bracket bracket{lo, hi, f(lo), f(hi)};
  if (std::isnan(bracket.f_lo) || std::isnan(bracket.f_hi)) {
    throw BracketError("bracket endpoint evaluated to NaN");
  }
  const bool straddles = (bracket.f_lo <= 0.0 && bracket.f_hi >= 0.0) ||
                         (bracket.f_lo >= 0.0 && bracket.f_hi <= 0.0);
  if (!straddles) {
    throw BracketError("no sign change across bracket");
  }
  return bracket;
}

// Brent's method: bisection / secant / inverse quadratic interpolation.
// Returns x with the remaining bracket no wider than config.abs_tol.
template <typename F>
double BrentRoot(F&& f, const Bracket& bracket,
                 const SolverConfig& config = kRootDefaults) {
  double a = bracket.lo, b = bracket.hi;
  double fa = bracket.f_lo, fb = bracket.f_hi;
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 0; iter < config.max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 =
        2.0 * std::numeric_limits<double>::epsilon() * std::fabs(b) +
        0.5 * config.abs_tol;
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0) {
      return b;
    }
    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
      const double min2 = std::fabs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::fabs(d) > tol1) ? d : std::copysign(tol1, xm);
    fb = f(b);
  }
  throw ConvergenceError("Brent root search exceeded max_iter", b);
}

// Golden-section search for the minimum of a unimodal f on [lo, hi].
// Returns (argmin, f(argmin)) once the interval is at most config.abs_tol.
template <typename F>
std::pair<double, double> GoldenMinimize(
    F&& f, double lo, double hi, const SolverConfig& config = kMinimizeDefaults) {
  if (!(lo < hi)) {
    throw DomainError("minimization interval requires lo < hi");
  }
  constexpr double kInvGolden = 0.61803398874989485;
  double a = lo, b = hi;
  double x1 = b - kInvGolden * (b - a);
  double x2 = a + kInvGolden * (b - a);
  double f1 = f(x1), f2 = f(x2);
  int iter = 0;
  while (b - a > config.abs_tol) {
    if (++iter > config.max_iter) {
      throw ConvergenceError("golden-section search exceeded max_iter",
                             0.5 * (a + b));
    }
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvGolden * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvGolden * (b - a);
      f2 = f(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

struct QuadratureNode {
  double x = 0.0;  // abscissa on [-1, 1]
  double w = 0.0;
};

// Gauss-Legendre nodes and weights on [-1, 1]; the 129-node rule used by
// the trade-off module is cached after the first call.
const std::vector<QuadratureNode>& GaussLegendreRule(int nodes);

// Fixed-node Gauss-Legendre estimate of the integral of f over [lo, hi].
template <typename F>
double GaussLegendre(F&& f, double lo, double hi, int nodes) {
  const std::vector<QuadratureNode>& rule = GaussLegendreRule(nodes);
  const double mid = 0.5 * (hi + lo);
  const double half = 0.5 * (hi - lo);
  double sum = 0.0;
  for (const QuadratureNode& node : rule) {
    sum += node.w * f(mid + half * node.x);
  }
  return sum * half;
}

}  // namespace gaussdp

#endif  // GAUSSDP_SOLVER_H_
