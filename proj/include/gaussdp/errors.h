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

#ifndef GAUSSDP_ERRORS_H_
#define GAUSSDP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace gaussdp {

// An input outside a function's mathematical domain (non-finite value,
// negative scale, probability outside its range, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request that has no solution at all, e.g. asking for delta = 0 from a
// Gaussian mechanism: no finite epsilon achieves it.
class UnsatisfiableError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A root bracket whose endpoints do not straddle a sign change.
class BracketError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An iterative routine exhausted its iteration budget. Carries the best
// iterate seen so callers can decide whether it is usable.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate) {}

  double best_estimate() const { return best_estimate_; }

 private:
  double best_estimate_;
};

}  // namespace gaussdp

#endif  // GAUSSDP_ERRORS_H_
