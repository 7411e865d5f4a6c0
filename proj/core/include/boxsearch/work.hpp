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

#ifndef BOXSEARCH_WORK_HPP_
#define BOXSEARCH_WORK_HPP_

#include <cstddef>
#include <vector>

#include "boxsearch/density.hpp"

namespace boxsearch {

// Two masses count as equal when they differ by at most this fraction of the
// larger one.
inline constexpr double kTieTolerance = 1e-12;

bool masses_tie(double a, double b) noexcept;

// Box indices (0-based) in the order the optimal searcher opens them:
// non-increasing mass, ties kept in original index order.
std::vector<std::size_t> ideal_order(const HidingDensity& p);

// Minimal expected number of openings, sum_j j * p(a_j) over ideal_order.
double ideal_work(const HidingDensity& p);

// The same quantity written as a sum over ordered pairs of boxes:
//   sum_{p(i) < p(j)} p(i) + 1/2 sum_{p(i) = p(j)} p(i) + 1/2.
// Quadratic in the number of boxes.
double ideal_work_pairform(const HidingDensity& p);

// (sum_i sqrt p(i))^2, the expected work of the best memoryless strategy.
double holder_half(const HidingDensity& p);

// Shannon entropy in nats.
double entropy(const HidingDensity& p);

// q(i) proportional to sqrt p(i).
SearchDensity best_search_density(const HidingDensity& p);

// Expected openings when boxes are drawn independently from q:
// sum_i p(i) / q(i).
double random_work(const HidingDensity& p, const SearchDensity& q);

// Expected number of openings of already-opened boxes under q, counting every
// opening of a box beyond its first.
double duplicated_work(const HidingDensity& p, const SearchDensity& q);

// H_n = 1 + 1/2 + ... + 1/n, summed directly.
double harmonic_number(std::size_t n);

struct WorkReport {
  double ideal_work = 0.0;
  double holder_half = 0.0;
  double entropy = 0.0;
  double harmonic_n = 0.0;
  double lower_bound = 0.0;           // holder_half / H_N
  double lower_bound_log = 0.0;       // holder_half / (1 + log N)
  double upper_bound_simple = 0.0;    // holder_half
  double upper_bound_improved = 0.0;  // (holder_half + 1) / 2
  double entropy_lower = 0.0;         // exp(entropy - 1)
  double entropy_work_cap = 0.0;      // entropy_upper_bound(ideal_work)
};

WorkReport bounds_report(const HidingDensity& p);

}  // namespace boxsearch

#endif  // BOXSEARCH_WORK_HPP_
