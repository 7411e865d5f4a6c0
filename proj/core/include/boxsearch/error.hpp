// Copyright 2026 The Boxsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BOXSEARCH_ERROR_HPP_
#define BOXSEARCH_ERROR_HPP_

#include <optional>
#include <stdexcept>
#include <string>

namespace boxsearch {

// Malformed or out-of-contract input: empty vectors, non-positive masses,
// sums away from 1, mismatched lengths.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but the requested quantity is not defined or not
// computable within the configured limits (size caps, overflow, degenerate
// densities for the asymptotic formulas).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised by the asymptotic work formulas when every box has the same mass.
// Carries the exact ideal work of the power, (N^k + 1) / 2, in log form so
// that it survives for large k.
class DegenerateDensity : public DomainError {
 public:
  DegenerateDensity(const std::string& what, double log_exact_work)
      : DomainError(what), log_exact_work_(log_exact_work) {}

  double log_exact_work() const noexcept { return log_exact_work_; }

 private:
  double log_exact_work_;
};

}  // namespace boxsearch

#endif  // BOXSEARCH_ERROR_HPP_
