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

#ifndef BOXSEARCH_DENSITY_HPP_
#define BOXSEARCH_DENSITY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace boxsearch {

// Masses handed to a density constructor must sum to 1 within this much.
// Anything further off is rejected; use normalize() to rescale weights.
inline constexpr double kSumTolerance = 1e-9;

// Labels "1", "2", ..., "n".
std::vector<std::string> default_labels(std::size_t n);

// Where the prize is hidden: a strictly positive probability vector over
// labelled boxes. Immutable once constructed.
class HidingDensity {
 public:
  explicit HidingDensity(std::vector<double> probs);
  HidingDensity(std::vector<std::string> labels, std::vector<double> probs);

  // Same as the labelled constructor, but boxes whose mass is exactly zero
  // are removed (with their labels) before validation.
  static HidingDensity dropping_zeros(std::vector<std::string> labels,
                                      std::vector<double> probs);
  static HidingDensity uniform(std::size_t n);

  std::size_t size() const noexcept { return probs_.size(); }
  std::span<const double> probs() const noexcept { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend bool operator==(const HidingDensity&, const HidingDensity&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<double> probs_;
};

// A memoryless search strategy: box i is opened with probability q(i) at
// every step. Positions align with the boxes of a HidingDensity.
class SearchDensity {
 public:
  explicit SearchDensity(std::vector<double> probs);

  static SearchDensity uniform(std::size_t n);

  std::size_t size() const noexcept { return probs_.size(); }
  std::span<const double> probs() const noexcept { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }

  friend bool operator==(const SearchDensity&, const SearchDensity&) = default;

 private:
  std::vector<double> probs_;
};

// Rescales positive finite weights into a hiding density.
HidingDensity normalize(std::span<const double> weights,
                        std::optional<std::vector<std::string>> labels = {});

}  // namespace boxsearch

#endif  // BOXSEARCH_DENSITY_HPP_
