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

#include "boxsearch/work.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "boxsearch/error.hpp"
#include "boxsearch/maxent.hpp"

namespace boxsearch {
namespace {

void check_aligned(const HidingDensity& p, const SearchDensity& q,
                   const char* who) {
  if (p.size() != q.size()) {
    throw InvalidInput(std::string(who) + ": search density has " +
                       std::to_string(q.size()) + " boxes, hiding density " +
                       std::to_string(p.size()));
  }
}

}  // namespace

bool masses_tie(double a, double b) noexcept {
  return std::abs(a - b) <= kTieTolerance * std::max(a, b);
}

std::vector<std::size_t> ideal_order(const HidingDensity& p) {
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });
  return order;
}

double ideal_work(const HidingDensity& p) {
  const auto order = ideal_order(p);
  double work = 0.0;
  for (std::size_t j = 0; j < order.size(); ++j) {
    work += static_cast<double>(j + 1) * p[order[j]];
  }
  return work;
}

double ideal_work_pairform(const HidingDensity& p) {
  const std::size_t n = p.size();
  double below = 0.0;
  double tied = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t n_below = 0;
    std::size_t n_tied = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (masses_tie(p[i], p[j])) {
        ++n_tied;
      } else if (p[i] < p[j]) {
        ++n_below;
      }
    }
    below += static_cast<double>(n_below) * p[i];
    tied += static_cast<double>(n_tied) * p[i];
  }
  return below + 0.5 * tied + 0.5;
}

double holder_half(const HidingDensity& p) {
  double root_sum = 0.0;
  for (double m : p.probs()) root_sum += std::sqrt(m);
  return root_sum * root_sum;
}

double entropy(const HidingDensity& p) {
  double h = 0.0;
  for (double m : p.probs()) h -= m * std::log(m);
  return h;
}

SearchDensity best_search_density(const HidingDensity& p) {
  std::vector<double> q(p.size());
  double root_sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    q[i] = std::sqrt(p[i]);
    root_sum += q[i];
  }
  for (double& v : q) v /= root_sum;
  return SearchDensity(std::move(q));
}

double random_work(const HidingDensity& p, const SearchDensity& q) {
  check_aligned(p, q, "random_work");
  double work = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) work += p[i] / q[i];
  return work;
}

double duplicated_work(const HidingDensity& p, const SearchDensity& q) {
  check_aligned(p, q, "duplicated_work");
  // Full double sum including i == j; the diagonal contributes exactly 1/2.
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) {
      row += q[j] * q[j] / (q[i] * (q[i] + q[j]));
    }
    total += p[i] * row;
  }
  return total - 0.5;
}

double harmonic_number(std::size_t n) {
  double h = 0.0;
  // Smallest terms first.
  for (std::size_t i = n; i >= 1; --i) h += 1.0 / static_cast<double>(i);
  return h;
}

WorkReport bounds_report(const HidingDensity& p) {
  WorkReport r;
  r.ideal_work = ideal_work(p);
  r.holder_half = holder_half(p);
  r.entropy = entropy(p);
  r.harmonic_n = harmonic_number(p.size());
  r.lower_bound = r.holder_half / r.harmonic_n;
  r.lower_bound_log =
      r.holder_half / (1.0 + std::log(static_cast<double>(p.size())));
  r.upper_bound_simple = r.holder_half;
  r.upper_bound_improved = 0.5 * (r.holder_half + 1.0);
  r.entropy_lower = std::exp(r.entropy - 1.0);
  r.entropy_work_cap = entropy_upper_bound(std::max(r.ideal_work, 1.0));
  return r;
}

}  // namespace boxsearch
