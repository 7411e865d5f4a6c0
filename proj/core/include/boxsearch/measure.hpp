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

#ifndef BOXSEARCH_MEASURE_HPP_
#define BOXSEARCH_MEASURE_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "boxsearch/density.hpp"

namespace boxsearch {

// Atoms lighter than this are discarded whenever a measure is built.
inline constexpr double kMassFloor = 1e-300;

// Default ceiling on the number of atoms convolve_power may hold.
inline constexpr std::size_t kDefaultAtomBudget = 20'000'000;

struct Atom {
  std::vector<std::int32_t> coefficients;
  double mass = 0.0;
};

// A finite sum of point masses on the real line. Each atom sits at
//   dot(coefficients, basis)
// for an integer coefficient vector, so sums of positions produced by
// convolution are merged exactly rather than by floating-point comparison.
// Atoms are stored in lexicographic order of their coefficient vectors;
// two atoms never share a coefficient vector, but distinct vectors may
// still land on the same real position.
class AtomicMeasure {
 public:
  AtomicMeasure() = default;

  // The zero measure over `basis`.
  explicit AtomicMeasure(std::vector<double> basis);

  // Atoms with equal coefficient vectors are merged. Throws InvalidInput on
  // a coefficient vector of the wrong length, non-finite basis values, or a
  // mass that is not finite and positive.
  AtomicMeasure(std::vector<double> basis, std::span<const Atom> atoms);

  static AtomicMeasure delta(std::vector<double> basis,
                             std::vector<std::int32_t> coefficients,
                             double mass = 1.0);

  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t size() const noexcept { return masses_.size(); }
  bool empty() const noexcept { return masses_.empty(); }
  const std::vector<double>& basis() const noexcept { return basis_; }

  std::span<const std::int32_t> coefficients(std::size_t i) const {
    return {coeffs_.data() + i * dim(), dim()};
  }
  double mass(std::size_t i) const { return masses_[i]; }
  std::span<const double> masses() const noexcept { return masses_; }
  double position(std::size_t i) const;
  double total_mass() const noexcept { return total_mass_; }

  bool is_probability(double tol = 1e-12) const noexcept;

  // Largest |basis value|; 0 for an empty basis.
  double max_abs_basis() const noexcept;

  // Positions within this distance of zero are treated as zero:
  // 1e-9 * (1 + max_abs_basis()).
  double position_epsilon() const noexcept;

  friend bool operator==(const AtomicMeasure&, const AtomicMeasure&) = default;

 private:
  friend class AtomAccumulator;

  std::vector<double> basis_;
  std::vector<std::int32_t> coeffs_;  // size() * dim(), row-major
  std::vector<double> masses_;
  double total_mass_ = 0.0;
};

// Same basis, same coefficient vectors, masses within `tol` of each other.
bool approx_equal(const AtomicMeasure& a, const AtomicMeasure& b, double tol);

// Sorted distinct values of log p(a), the basis shared by phi and psi.
// Masses that tie (see masses_tie) share one basis value.
struct LogBasis {
  std::vector<double> values;
  std::vector<std::size_t> group_of_box;
};
LogBasis log_basis(const HidingDensity& p);

// sum_a p(a) delta_{log p(a)}.
AtomicMeasure phi(const HidingDensity& p);

// sum_a N^{-1} delta_{log p(a)}.
AtomicMeasure psi(const HidingDensity& p);

// Negates every position.
AtomicMeasure reflect(const AtomicMeasure& m);

// Both operands must have element-wise identical bases (see rebase_concat).
AtomicMeasure convolve(const AtomicMeasure& a, const AtomicMeasure& b);

// k-fold self-convolution, k >= 1. Throws DomainError if the intermediate
// atom count exceeds `max_atoms`.
AtomicMeasure convolve_power(const AtomicMeasure& m, std::size_t k,
                             std::size_t max_atoms = kDefaultAtomBudget);

// Re-expresses a and b over the concatenated basis a.basis ++ b.basis by
// zero-extending coefficient vectors. Duplicate basis values are kept.
std::pair<AtomicMeasure, AtomicMeasure> rebase_concat(const AtomicMeasure& a,
                                                      const AtomicMeasure& b);

// The measure e^{s x} m, not normalized.
AtomicMeasure exp_weight(const AtomicMeasure& m, double s);

struct TiltResult {
  AtomicMeasure measure;  // e^{s x} m / total
  double total = 0.0;     // integral of e^{s x} dm
};

TiltResult tilt(const AtomicMeasure& m, double s);

// reflect(phi(p)) * psi(p).
AtomicMeasure mu_of(const HidingDensity& p);

// mu_of(p) tilted by 1/2; symmetric about the origin.
AtomicMeasure zeta_of(const HidingDensity& p);

// N mu(x > 0) + (N / 2) mu(x = 0) + 1/2, with zero decided by
// mu.position_epsilon(). Throws InvalidInput unless mu has total mass 1
// within 1e-9.
double work_from_measure(const AtomicMeasure& mu, std::size_t n);

// One atom per line, "position<TAB>mass", ascending position, 17 significant
// digits.
void write_atom_dump(std::ostream& os, const AtomicMeasure& m);

}  // namespace boxsearch

#endif  // BOXSEARCH_MEASURE_HPP_
