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

#ifndef BOXSEARCH_MAXENT_HPP_
#define BOXSEARCH_MAXENT_HPP_

#include <cstddef>

#include "boxsearch/density.hpp"

namespace boxsearch {

// p(i) = x^i / sum_{j=1..n} x^j on boxes 1..n. Evaluated relative to the
// largest term, so extreme x or large n do not overflow.
HidingDensity geometric_density(double x, std::size_t n);

// Mean box index of geometric_density(x, n). For x <= 1 this is also the
// ideal work of that density; for x > 1 the masses increase with i and it
// is only the mean.
double geometric_mean_work(double x, std::size_t n);

struct GeometricFamilyPoint {
  double x = 1.0;
  std::size_t n = 1;
  double mean_work = 1.0;
};

// The unique x > 0 with geometric_mean_work(x, n) == w, for 1 < w < n.
// Bracketing starts at [1/2, 2] and doubles outward; bisection follows.
// Throws InvalidInput outside the open interval.
double solve_x_for_work(double w, std::size_t n);

GeometricFamilyPoint solve_family_point(double w, std::size_t n);

// Among densities on {1..n} with mean w, the one of largest entropy.
HidingDensity maxent_density(double w, std::size_t n);

// Ceiling on the entropy of any density whose ideal work is w:
// w log w - (w - 1) log(w - 1), taken as 0 at w = 1.
double entropy_upper_bound(double w);

struct LimitingStats {
  double work = 1.0;
  double entropy = 0.0;
};

// Work and entropy of p(i) proportional to x^i on all positive integers,
// 0 < x < 1.
LimitingStats limiting_family_stats(double x);

}  // namespace boxsearch

#endif  // BOXSEARCH_MAXENT_HPP_
