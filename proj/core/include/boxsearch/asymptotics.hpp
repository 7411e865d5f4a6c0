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

#ifndef BOXSEARCH_ASYMPTOTICS_HPP_
#define BOXSEARCH_ASYMPTOTICS_HPP_

#include <cstddef>

#include "boxsearch/density.hpp"

namespace boxsearch {

inline constexpr double kDefaultLatticeTolerance = 1e-9;

// Variance of zeta_of(p):
//   holder_half(p)^{-1} sum_{i,j} sqrt(p(i) p(j)) log^2(p(i) / p(j)).
double variance_zeta(const HidingDensity& p);

// Whether the log-ratios log(p(i)/p(j)) all lie on one lattice b Z.
//
// The period is found by a Euclid-style gcd over the gaps between
// consecutive distinct log-masses, with remainders at or below
// tol * max|gap| counted as zero. The reduction is accepted only if the
// surviving period stays well above that threshold (1000x); otherwise the
// remainders ran down into rounding noise and the ratios are treated as
// incommensurable.
struct LatticeInfo {
  bool degenerate = false;  // a single distinct mass; zeta is a point mass
  bool is_lattice = false;
  double period = 0.0;      // b, meaningful only when is_lattice
  double candidate_period = 0.0;  // what the gcd reduction ended on
  double sigma_sq = 0.0;
  // The decision sat within a factor of 10 of a threshold: the candidate
  // period was within 10x of the acceptance floor, or it cleared the floor
  // and the largest residual was within 10x of the tolerance.
  bool marginal = false;
  double max_residual = 0.0;
};

LatticeInfo lattice_info(const HidingDensity& p,
                         double tol_lattice = kDefaultLatticeTolerance);

// Leading-order ideal work of the k-fold power p^{x k}:
//   non-lattice: 2 H^k / (sqrt(2 pi k) sigma)
//   lattice:     b H^k / (sqrt(2 pi k) 2 sigma tanh(b / 4))
// with H = holder_half(p). Throws DegenerateDensity when all masses are
// equal.
struct AsymptoticWork {
  bool is_lattice = false;
  double log_value = 0.0;
  double value = 0.0;  // may be +inf where only the log is representable
};

AsymptoticWork asymptotic_work_detail(const HidingDensity& p, std::size_t k,
                                      double tol_lattice =
                                          kDefaultLatticeTolerance);

// As above, but forcing a branch regardless of lattice detection.
AsymptoticWork asymptotic_work_branch(const HidingDensity& p, std::size_t k,
                                      bool lattice, double period);

double asymptotic_work(const HidingDensity& p, std::size_t k,
                       double tol_lattice = kDefaultLatticeTolerance);

double log_asymptotic_work(const HidingDensity& p, std::size_t k,
                           double tol_lattice = kDefaultLatticeTolerance);

}  // namespace boxsearch

#endif  // BOXSEARCH_ASYMPTOTICS_HPP_
