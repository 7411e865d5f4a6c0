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

#include "boxsearch/maxent.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "boxsearch/error.hpp"

namespace boxsearch {
namespace {

constexpr int kMaxBracketSteps = 100;  // 2^100 scaling either way
constexpr int kMaxBisections = 4000;

void check_family_args(double x, std::size_t n, const char* who) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw InvalidInput(std::string(who) + ": ratio must be finite and > 0");
  }
  if (n == 0) throw InvalidInput(std::string(who) + ": need at least one box");
}

// Unnormalized weights x^(i - i_max) for i = 1..n, so the largest is 1.
std::vector<double> relative_weights(double x, std::size_t n) {
  const double log_x = std::log(x);
  const double top = x >= 1.0 ? static_cast<double>(n) : 1.0;
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = std::exp((static_cast<double>(i + 1) - top) * log_x);
  }
  return w;
}

}  // namespace

HidingDensity geometric_density(double x, std::size_t n) {
  check_family_args(x, n, "geometric_density");
  if (x == 1.0) return HidingDensity::uniform(n);
  auto w = relative_weights(x, n);
  double total = 0.0;
  for (double v : w) total += v;
  for (double& v : w) {
    v /= total;
    if (v == 0.0) {
      throw DomainError("geometric_density: mass underflows for x = " +
                        std::to_string(x) + ", n = " + std::to_string(n));
    }
  }
  return HidingDensity(std::move(w));
}

double geometric_mean_work(double x, std::size_t n) {
  check_family_args(x, n, "geometric_mean_work");
  if (x == 1.0) return 0.5 * (static_cast<double>(n) + 1.0);
  const auto w = relative_weights(x, n);
  double total = 0.0;
  double first_moment = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    total += w[i];
    first_moment += static_cast<double>(i + 1) * w[i];
  }
  return first_moment / total;
}

double solve_x_for_work(double w, std::size_t n) {
  if (n < 2) throw InvalidInput("solve_x_for_work: need at least two boxes");
  const double upper = static_cast<double>(n);
  if (!(w > 1.0 && w < upper)) {
    throw InvalidInput("solve_x_for_work: work " + std::to_string(w) +
                       " outside the open interval (1, " +
                       std::to_string(n) + ")");
  }

  double lo = 0.5;
  double hi = 2.0;
  for (int step = 0; geometric_mean_work(hi, n) < w; ++step) {
    if (step == kMaxBracketSteps) {
      throw DomainError("solve_x_for_work: no bracket below 2^100");
    }
    lo = hi;
    hi *= 2.0;
  }
  for (int step = 0; geometric_mean_work(lo, n) > w; ++step) {
    if (step == kMaxBracketSteps) {
      throw DomainError("solve_x_for_work: no bracket above 2^-100");
    }
    hi = lo;
    lo *= 0.5;
  }

  // Bisect until the bracket is two adjacent doubles.
  for (int it = 0; it < kMaxBisections; ++it) {
    // Geometric midpoint while the bracket spans more than a factor of two.
    const double mid = hi > 2.0 * lo ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (geometric_mean_work(mid, n) < w) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double r_lo = std::abs(geometric_mean_work(lo, n) - w);
  const double r_hi = std::abs(geometric_mean_work(hi, n) - w);
  return r_lo <= r_hi ? lo : hi;
}

GeometricFamilyPoint solve_family_point(double w, std::size_t n) {
  const double x = solve_x_for_work(w, n);
  return {x, n, geometric_mean_work(x, n)};
}

HidingDensity maxent_density(double w, std::size_t n) {
  return geometric_density(solve_x_for_work(w, n), n);
}

double entropy_upper_bound(double w) {
  if (!(w >= 1.0)) {
    throw InvalidInput("entropy_upper_bound: work must be >= 1");
  }
  if (w == 1.0) return 0.0;
  return w * std::log(w) - (w - 1.0) * std::log(w - 1.0);
}

LimitingStats limiting_family_stats(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw InvalidInput("limiting_family_stats: ratio must lie in (0, 1)");
  }
  LimitingStats s;
  s.work = 1.0 / (1.0 - x);
  s.entropy = -x / (1.0 - x) * std::log(x) - std::log1p(-x);
  return s;
}

}  // namespace boxsearch
