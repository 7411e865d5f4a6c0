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

#include "boxsearch/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "boxsearch/error.hpp"
#include "boxsearch/measure.hpp"
#include "boxsearch/work.hpp"

namespace boxsearch {
namespace {

constexpr double kPeriodFloorFactor = 1e3;

// gcd of two positive reals, remainders within `thr` of 0 or of the divisor
// counted as exact.
double real_gcd(double a, double b, double thr) {
  if (a < b) std::swap(a, b);
  while (b > thr) {
    double r = std::fmod(a, b);
    if (b - r <= thr) r = 0.0;
    a = b;
    b = r;
  }
  return a;
}

double residual(double value, double period) {
  return std::abs(value - std::round(value / period) * period);
}

[[noreturn]] void throw_degenerate(const HidingDensity& p, std::size_t k) {
  const double log_nk =
      static_cast<double>(k) * std::log(static_cast<double>(p.size()));
  const double log_exact =
      log_nk - std::numbers::ln2 + std::log1p(std::exp(-log_nk));
  throw DegenerateDensity(
      "degenerate density: all " + std::to_string(p.size()) +
          " masses are equal, so the asymptotic formula does not apply; "
          "exact ideal work is (N^k + 1) / 2",
      log_exact);
}

}  // namespace

double variance_zeta(const HidingDensity& p) {
  const std::size_t n = p.size();
  std::vector<double> roots(n), logs(n);
  for (std::size_t i = 0; i < n; ++i) {
    roots[i] = std::sqrt(p[i]);
    logs[i] = std::log(p[i]);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double lr = logs[i] - logs[j];
      sum += roots[i] * roots[j] * lr * lr;
    }
  }
  return sum / holder_half(p);
}

LatticeInfo lattice_info(const HidingDensity& p, double tol_lattice) {
  if (!(tol_lattice > 0.0)) {
    throw InvalidInput("lattice tolerance must be positive");
  }
  LatticeInfo info;
  const LogBasis lb = log_basis(p);
  if (lb.values.size() == 1) {
    info.degenerate = true;
    return info;
  }
  info.sigma_sq = variance_zeta(p);

  std::vector<double> gaps;
  for (std::size_t i = 1; i < lb.values.size(); ++i) {
    gaps.push_back(lb.values[i] - lb.values[i - 1]);
  }
  const double span = lb.values.back() - lb.values.front();
  const double thr = tol_lattice * span;

  double period = gaps.front();
  for (std::size_t i = 1; i < gaps.size(); ++i) {
    period = real_gcd(period, gaps[i], thr);
  }

  const double floor = kPeriodFloorFactor * thr;
  double worst = residual(span, period);
  for (double g : gaps) worst = std::max(worst, residual(g, period));
  info.max_residual = worst;
  info.candidate_period = period;
  info.is_lattice = period > floor && worst <= thr;
  if (info.is_lattice) info.period = period;
  // Residuals only mean something once the period clears the floor; an
  // irrational reduction always ends with residuals of order thr.
  const bool near_floor = period > 0.1 * floor && period <= 10.0 * floor;
  const bool near_tol = worst > 0.1 * thr && worst <= 10.0 * thr;
  info.marginal = near_floor || (period > floor && near_tol);
  return info;
}

AsymptoticWork asymptotic_work_branch(const HidingDensity& p, std::size_t k,
                                      bool lattice, double period) {
  if (k == 0) throw InvalidInput("asymptotic work: k must be at least 1");
  if (log_basis(p).values.size() == 1) throw_degenerate(p, k);
  if (lattice && !(period > 0.0)) {
    throw InvalidInput("asymptotic work: lattice branch needs a period > 0");
  }
  const double sigma = std::sqrt(variance_zeta(p));
  const double h = holder_half(p);
  const double kk = static_cast<double>(k);
  const double root = std::sqrt(2.0 * std::numbers::pi * kk);

  AsymptoticWork out;
  out.is_lattice = lattice;
  if (lattice) {
    const double th = std::tanh(period / 4.0);
    out.value = period * std::pow(h, kk) / (root * 2.0 * sigma * th);
    out.log_value = std::log(period) + kk * std::log(h) - std::log(root) -
                    std::log(2.0 * sigma) - std::log(th);
  } else {
    out.value = 2.0 * std::pow(h, kk) / (root * sigma);
    out.log_value = std::numbers::ln2 + kk * std::log(h) - std::log(root) -
                    std::log(sigma);
  }
  return out;
}

AsymptoticWork asymptotic_work_detail(const HidingDensity& p, std::size_t k,
                                      double tol_lattice) {
  const LatticeInfo info = lattice_info(p, tol_lattice);
  if (info.degenerate) throw_degenerate(p, k);
  return asymptotic_work_branch(p, k, info.is_lattice, info.period);
}

double asymptotic_work(const HidingDensity& p, std::size_t k,
                       double tol_lattice) {
  return asymptotic_work_detail(p, k, tol_lattice).value;
}

double log_asymptotic_work(const HidingDensity& p, std::size_t k,
                           double tol_lattice) {
  return asymptotic_work_detail(p, k, tol_lattice).log_value;
}

}  // namespace boxsearch
