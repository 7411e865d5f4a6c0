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

#include "boxsearch/products.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "boxsearch/error.hpp"
#include "boxsearch/work.hpp"

namespace boxsearch {
namespace {

// log(1e15): beyond this the +1/2 term is below double resolution.
const double kLogHalfTermCutoff = std::log(1e15);

std::size_t checked_power(std::size_t n, std::size_t k, std::size_t cap) {
  std::size_t cells = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n != 0 && cells > cap / n) {
      throw DomainError(std::to_string(n) + "^" + std::to_string(k) +
                        " boxes exceeds the cap of " + std::to_string(cap));
    }
    cells *= n;
  }
  return cells;
}

}  // namespace

HidingDensity product(const HidingDensity& p, const HidingDensity& q,
                      std::size_t cell_cap) {
  if (q.size() != 0 && p.size() > cell_cap / q.size()) {
    throw DomainError("product: " + std::to_string(p.size()) + " x " +
                      std::to_string(q.size()) + " boxes exceeds the cap of " +
                      std::to_string(cell_cap));
  }
  std::vector<std::string> labels;
  std::vector<double> probs;
  labels.reserve(p.size() * q.size());
  probs.reserve(p.size() * q.size());
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < q.size(); ++b) {
      labels.push_back("(" + p.labels()[a] + "," + q.labels()[b] + ")");
      probs.push_back(p[a] * q[b]);
    }
  }
  return HidingDensity(std::move(labels), std::move(probs));
}

double power_oracle_work(const HidingDensity& p, std::size_t k,
                         std::size_t cell_cap) {
  if (k == 0) throw InvalidInput("power_oracle_work: k must be at least 1");
  const std::size_t cells = checked_power(p.size(), k, cell_cap);

  std::vector<double> masses{1.0};
  masses.reserve(cells);
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<double> next;
    next.reserve(masses.size() * p.size());
    for (double m : masses) {
      for (double v : p.probs()) next.push_back(m * v);
    }
    masses = std::move(next);
  }
  std::sort(masses.begin(), masses.end(), std::greater<>());
  double work = 0.0;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    work += static_cast<double>(i + 1) * masses[i];
  }
  return work;
}

double PowerWork::log_value() const {
  const double log_scale = static_cast<double>(k) * log_holder;
  const double log_main = log_scale + std::log(0.5 * integral);
  if (log_scale > kLogHalfTermCutoff) return log_main;
  return log_main + std::log1p(0.5 * std::exp(-log_main));
}

double PowerWork::value() const {
  const double log_main =
      static_cast<double>(k) * log_holder + std::log(0.5 * integral);
  if (log_main >= std::log(std::numeric_limits<double>::max())) {
    throw DomainError("power work overflows a double at k = " +
                      std::to_string(k) + "; use the log-space value");
  }
  return std::pow(holder, static_cast<double>(k)) * 0.5 * integral + 0.5;
}

PowerWork evaluate_power_work(const HidingDensity& p, std::size_t k,
                              std::size_t max_atoms) {
  if (k == 0) throw InvalidInput("power work: k must be at least 1");
  PowerWork out;
  out.k = k;
  out.holder = holder_half(p);
  out.log_holder = std::log(out.holder);
  const AtomicMeasure zk = convolve_power(zeta_of(p), k, max_atoms);
  double integral = 0.0;
  for (std::size_t i = 0; i < zk.size(); ++i) {
    integral += zk.mass(i) * std::exp(-0.5 * std::abs(zk.position(i)));
  }
  out.integral = integral;
  out.atoms = zk.size();
  return out;
}

double power_work_exact(const HidingDensity& p, std::size_t k) {
  return evaluate_power_work(p, k).value();
}

double log_power_work(const HidingDensity& p, std::size_t k) {
  return evaluate_power_work(p, k).log_value();
}

}  // namespace boxsearch
