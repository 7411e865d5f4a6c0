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

#ifndef BOXSEARCH_PRODUCTS_HPP_
#define BOXSEARCH_PRODUCTS_HPP_

#include <cstddef>

#include "boxsearch/density.hpp"
#include "boxsearch/measure.hpp"

namespace boxsearch {

// Largest number of boxes a materialized product may have.
inline constexpr std::size_t kDefaultCellCap = 100'000'000;

// The density p(a) q(b) on label pairs "(a,b)", ordered with the first
// factor's index varying slowest.
HidingDensity product(const HidingDensity& p, const HidingDensity& q,
                      std::size_t cell_cap = kDefaultCellCap);

// Ideal work of the k-fold power by brute force: builds all N^k box masses,
// sorts them and sums i * m_i. Throws DomainError when N^k > cell_cap.
double power_oracle_work(const HidingDensity& p, std::size_t k,
                         std::size_t cell_cap = kDefaultCellCap);

// Ingredients of the exact power-work formula
//   W(p^k) = holder_half(p)^k / 2 * integral + 1/2,
// where integral = sum over atoms of zeta_of(p)^{*k} of mass e^{-|x|/2}.
struct PowerWork {
  std::size_t k = 1;
  double holder = 1.0;      // holder_half(p)
  double log_holder = 0.0;
  double integral = 1.0;
  std::size_t atoms = 1;    // support size of zeta^{*k}

  // log W(p^k); the +1/2 is folded in while holder_half^k <= 1e15 and
  // dropped beyond that, where its relative weight is below 1e-15.
  double log_value() const;

  // W(p^k) in linear scale; throws DomainError if it overflows a double.
  double value() const;
};

PowerWork evaluate_power_work(const HidingDensity& p, std::size_t k,
                              std::size_t max_atoms = kDefaultAtomBudget);

double power_work_exact(const HidingDensity& p, std::size_t k);

double log_power_work(const HidingDensity& p, std::size_t k);

}  // namespace boxsearch

#endif  // BOXSEARCH_PRODUCTS_HPP_
