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

#include "boxsearch/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "boxsearch/error.hpp"
#include "boxsearch/work.hpp"

namespace boxsearch {

// Open-addressing table from coefficient vectors to accumulated mass.
// Insertion order is preserved, so results are deterministic for a fixed
// sequence of add() calls.
class AtomAccumulator {
 public:
  AtomAccumulator(std::size_t dim, std::size_t expected) : dim_(dim) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    slots_.assign(cap, 0);
    keys_.reserve(expected * dim_);
    masses_.reserve(expected);
  }

  std::size_t size() const noexcept { return masses_.size(); }

  void add(const std::int32_t* coeff, double mass) {
    if (2 * (masses_.size() + 1) > slots_.size()) grow();
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t s = hash(coeff) & mask;; s = (s + 1) & mask) {
      const std::uint32_t slot = slots_[s];
      if (slot == 0) {
        keys_.insert(keys_.end(), coeff, coeff + dim_);
        masses_.push_back(mass);
        slots_[s] = static_cast<std::uint32_t>(masses_.size());
        return;
      }
      if (std::equal(coeff, coeff + dim_, keys_.data() + (slot - 1) * dim_)) {
        masses_[slot - 1] += mass;
        return;
      }
    }
  }

  // Sorts atoms into canonical order and drops those below the mass floor.
  AtomicMeasure finish(std::vector<double> basis) && {
    const std::size_t n = masses_.size();
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (masses_[i] >= kMassFloor) order.push_back(i);
    }
    const std::int32_t* keys = keys_.data();
    const std::size_t d = dim_;
    std::sort(order.begin(), order.end(), [=](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(keys + a * d, keys + a * d + d,
                                          keys + b * d, keys + b * d + d);
    });
    AtomicMeasure out;
    out.basis_ = std::move(basis);
    out.coeffs_.reserve(order.size() * d);
    out.masses_.reserve(order.size());
    for (std::size_t i : order) {
      out.coeffs_.insert(out.coeffs_.end(), keys + i * d, keys + i * d + d);
      out.masses_.push_back(masses_[i]);
    }
    out.total_mass_ = 0.0;
    for (double m : out.masses_) out.total_mass_ += m;
    return out;
  }

 private:
  std::size_t hash(const std::int32_t* coeff) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (std::size_t i = 0; i < dim_; ++i) {
      h ^= static_cast<std::uint32_t>(coeff[i]);
      h *= 0xBF58476D1CE4E5B9ull;
      h ^= h >> 29;
    }
    h *= 0x94D049BB133111EBull;
    h ^= h >> 32;
    return static_cast<std::size_t>(h);
  }

  void grow() {
    std::vector<std::uint32_t> fresh(slots_.size() * 2, 0);
    const std::size_t mask = fresh.size() - 1;
    for (std::size_t i = 0; i < masses_.size(); ++i) {
      std::size_t s = hash(keys_.data() + i * dim_) & mask;
      while (fresh[s] != 0) s = (s + 1) & mask;
      fresh[s] = static_cast<std::uint32_t>(i + 1);
    }
    slots_ = std::move(fresh);
  }

  std::size_t dim_;
  std::vector<std::int32_t> keys_;
  std::vector<double> masses_;
  std::vector<std::uint32_t> slots_;  // 1-based index into masses_, 0 = empty
};

namespace {

void check_basis(const std::vector<double>& basis) {
  for (double b : basis) {
    if (!std::isfinite(b)) throw InvalidInput("measure basis is not finite");
  }
}

void require_same_basis(const AtomicMeasure& a, const AtomicMeasure& b,
                        const char* who) {
  if (a.basis() != b.basis()) {
    throw InvalidInput(std::string(who) +
                       ": operands are expressed over different bases");
  }
}

// One convolution step; `budget` bounds the size of the result.
AtomicMeasure convolve_bounded(const AtomicMeasure& a, const AtomicMeasure& b,
                               std::size_t budget) {
  require_same_basis(a, b, "convolve");
  const std::size_t d = a.dim();
  const std::size_t guess = std::min<std::size_t>(
      budget, std::max<std::size_t>(a.size() + b.size(), a.size() * 2));
  AtomAccumulator acc(d, guess);
  std::vector<std::int32_t> sum(d);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto ca = a.coefficients(i);
    const double ma = a.mass(i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      const auto cb = b.coefficients(j);
      for (std::size_t t = 0; t < d; ++t) sum[t] = ca[t] + cb[t];
      acc.add(sum.data(), ma * b.mass(j));
    }
    if (acc.size() > budget) {
      throw DomainError("convolve: atom count exceeds budget of " +
                        std::to_string(budget));
    }
  }
  return std::move(acc).finish(a.basis());
}

}  // namespace

AtomicMeasure::AtomicMeasure(std::vector<double> basis)
    : basis_(std::move(basis)) {
  check_basis(basis_);
}

AtomicMeasure::AtomicMeasure(std::vector<double> basis,
                             std::span<const Atom> atoms) {
  check_basis(basis);
  AtomAccumulator acc(basis.size(), atoms.size());
  for (const Atom& atom : atoms) {
    if (atom.coefficients.size() != basis.size()) {
      throw InvalidInput("atom coefficient vector has length " +
                         std::to_string(atom.coefficients.size()) +
                         ", basis has " + std::to_string(basis.size()));
    }
    if (!std::isfinite(atom.mass) || atom.mass <= 0.0) {
      throw InvalidInput("atom mass must be finite and positive");
    }
    acc.add(atom.coefficients.data(), atom.mass);
  }
  *this = std::move(acc).finish(std::move(basis));
}

AtomicMeasure AtomicMeasure::delta(std::vector<double> basis,
                                   std::vector<std::int32_t> coefficients,
                                   double mass) {
  const Atom atom{std::move(coefficients), mass};
  return AtomicMeasure(std::move(basis), std::span<const Atom>(&atom, 1));
}

double AtomicMeasure::position(std::size_t i) const {
  const auto c = coefficients(i);
  double x = 0.0;
  for (std::size_t t = 0; t < dim(); ++t) {
    if (c[t] != 0) x += static_cast<double>(c[t]) * basis_[t];
  }
  return x;
}

bool AtomicMeasure::is_probability(double tol) const noexcept {
  return std::abs(total_mass_ - 1.0) <= tol;
}

double AtomicMeasure::max_abs_basis() const noexcept {
  double m = 0.0;
  for (double b : basis_) m = std::max(m, std::abs(b));
  return m;
}

double AtomicMeasure::position_epsilon() const noexcept {
  return 1e-9 * (1.0 + max_abs_basis());
}

bool approx_equal(const AtomicMeasure& a, const AtomicMeasure& b, double tol) {
  if (a.basis() != b.basis() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto ca = a.coefficients(i);
    const auto cb = b.coefficients(i);
    if (!std::equal(ca.begin(), ca.end(), cb.begin())) return false;
    if (std::abs(a.mass(i) - b.mass(i)) > tol) return false;
  }
  return true;
}

LogBasis log_basis(const HidingDensity& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> by_mass(n);
  std::iota(by_mass.begin(), by_mass.end(), std::size_t{0});
  std::stable_sort(by_mass.begin(), by_mass.end(),
                   [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });
  LogBasis out;
  out.group_of_box.assign(n, 0);
  double representative = 0.0;
  for (std::size_t idx : by_mass) {
    if (out.values.empty() || !masses_tie(p[idx], representative)) {
      representative = p[idx];
      out.values.push_back(std::log(representative));
    }
    out.group_of_box[idx] = out.values.size() - 1;
  }
  return out;
}

namespace {

AtomicMeasure unit_atoms(const LogBasis& lb, std::span<const double> weights) {
  const std::size_t d = lb.values.size();
  std::vector<Atom> atoms(d);
  for (std::size_t g = 0; g < d; ++g) {
    atoms[g].coefficients.assign(d, 0);
    atoms[g].coefficients[g] = 1;
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    atoms[lb.group_of_box[i]].mass += weights[i];
  }
  return AtomicMeasure(lb.values, atoms);
}

}  // namespace

AtomicMeasure phi(const HidingDensity& p) {
  return unit_atoms(log_basis(p), p.probs());
}

AtomicMeasure psi(const HidingDensity& p) {
  const std::vector<double> weights(p.size(),
                                    1.0 / static_cast<double>(p.size()));
  return unit_atoms(log_basis(p), weights);
}

AtomicMeasure reflect(const AtomicMeasure& m) {
  std::vector<Atom> atoms(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto c = m.coefficients(i);
    atoms[i].coefficients.resize(c.size());
    std::transform(c.begin(), c.end(), atoms[i].coefficients.begin(),
                   [](std::int32_t v) { return -v; });
    atoms[i].mass = m.mass(i);
  }
  return AtomicMeasure(m.basis(), atoms);
}

AtomicMeasure convolve(const AtomicMeasure& a, const AtomicMeasure& b) {
  return convolve_bounded(a, b, std::numeric_limits<std::size_t>::max());
}

AtomicMeasure convolve_power(const AtomicMeasure& m, std::size_t k,
                             std::size_t max_atoms) {
  if (k == 0) throw InvalidInput("convolve_power: k must be at least 1");
  // Left fold against the small factor.
  AtomicMeasure acc = m;
  for (std::size_t step = 1; step < k; ++step) {
    acc = convolve_bounded(acc, m, max_atoms);
  }
  return acc;
}

std::pair<AtomicMeasure, AtomicMeasure> rebase_concat(const AtomicMeasure& a,
                                                      const AtomicMeasure& b) {
  std::vector<double> basis = a.basis();
  basis.insert(basis.end(), b.basis().begin(), b.basis().end());
  const std::size_t d = basis.size();

  auto extend = [&](const AtomicMeasure& m, std::size_t offset) {
    std::vector<Atom> atoms(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      atoms[i].coefficients.assign(d, 0);
      const auto c = m.coefficients(i);
      std::copy(c.begin(), c.end(), atoms[i].coefficients.begin() + offset);
      atoms[i].mass = m.mass(i);
    }
    return AtomicMeasure(basis, atoms);
  };
  return {extend(a, 0), extend(b, a.dim())};
}

AtomicMeasure exp_weight(const AtomicMeasure& m, double s) {
  std::vector<Atom> atoms;
  atoms.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double w = m.mass(i) * std::exp(s * m.position(i));
    if (w < kMassFloor) continue;
    if (!std::isfinite(w)) {
      throw DomainError("exp_weight: weighted mass overflows");
    }
    const auto c = m.coefficients(i);
    atoms.push_back({std::vector<std::int32_t>(c.begin(), c.end()), w});
  }
  return AtomicMeasure(m.basis(), atoms);
}

TiltResult tilt(const AtomicMeasure& m, double s) {
  if (m.empty()) throw InvalidInput("tilt: measure has no atoms");
  AtomicMeasure weighted = exp_weight(m, s);
  const double total = weighted.total_mass();
  std::vector<Atom> atoms(weighted.size());
  for (std::size_t i = 0; i < weighted.size(); ++i) {
    const auto c = weighted.coefficients(i);
    atoms[i] = {std::vector<std::int32_t>(c.begin(), c.end()),
                weighted.mass(i) / total};
  }
  return {AtomicMeasure(weighted.basis(), atoms), total};
}

AtomicMeasure mu_of(const HidingDensity& p) {
  return convolve(reflect(phi(p)), psi(p));
}

AtomicMeasure zeta_of(const HidingDensity& p) {
  return tilt(mu_of(p), 0.5).measure;
}

double work_from_measure(const AtomicMeasure& mu, std::size_t n) {
  if (n == 0) throw InvalidInput("work_from_measure: need at least one box");
  if (!mu.is_probability(1e-9)) {
    throw InvalidInput("work_from_measure: total mass " +
                       std::to_string(mu.total_mass()) + " is not 1");
  }
  const double eps = mu.position_epsilon();
  double positive = 0.0;
  double zero = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const double x = mu.position(i);
    if (std::abs(x) <= eps) {
      zero += mu.mass(i);
    } else if (x > 0.0) {
      positive += mu.mass(i);
    }
  }
  const double nn = static_cast<double>(n);
  return nn * positive + 0.5 * nn * zero + 0.5;
}

void write_atom_dump(std::ostream& os, const AtomicMeasure& m) {
  std::vector<std::size_t> order(m.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> pos(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) pos[i] = m.position(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });
  char line[64];
  for (std::size_t i : order) {
    std::snprintf(line, sizeof line, "%.17g\t%.17g\n", pos[i], m.mass(i));
    os << line;
  }
}

}  // namespace boxsearch
