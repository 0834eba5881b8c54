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

#ifndef GAUSSDP_NORMAL_H_
#define GAUSSDP_NORMAL_H_

namespace gaussdp {

// Standard normal density phi(z).
double StdNormalPdf(double z);

// Standard normal CDF Phi(z), evaluated through the complementary error
// function so that deep left tails keep full relative accuracy instead of
// collapsing to 1 - Phi(-z). Throws DomainError for non-finite z.
double StdNormalCdf(double z);

// Upper tail 1 - Phi(z), relative accuracy preserved for z up to the limit
// of double representation (~38). Throws DomainError for non-finite z.
double StdNormalCdfComplement(double z);

// log(Phi(z)), usable far beyond the underflow point of Phi itself; needed
// when privacy profiles are evaluated at deltas below ~1e-300.
double LogStdNormalCdf(double z);

// Inverse CDF on (0,1): an Acklam-style rational initial estimate polished
// by two Halley steps against StdNormalCdf. Round trip
// |Phi(Phi^-1(p)) - p| stays within a few ulp of p across (0,1).
// Throws DomainError unless 0 < p < 1.
double StdNormalQuantile(double p);

}  // namespace gaussdp

#endif  // GAUSSDP_NORMAL_H_
