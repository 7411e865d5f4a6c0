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

#include "boxsearch/density.hpp"

#include <cmath>
#include <string>
#include <unordered_set>
#include <utility>

#include "boxsearch/error.hpp"

namespace boxsearch {
namespace {

void check_masses(std::span<const double> probs, const char* what) {
  if (probs.empty()) {
    throw InvalidInput(std::string(what) + ": no boxes");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double m = probs[i];
    if (!std::isfinite(m)) {
      throw InvalidInput(std::string(what) + ": mass " + std::to_string(i + 1) +
                         " is not finite");
    }
    if (m <= 0.0) {
      throw InvalidInput(std::string(what) + ": mass " + std::to_string(i + 1) +
                         " is not strictly positive");
    }
    sum += m;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw InvalidInput(std::string(what) + ": masses sum to " +
                       std::to_string(sum) + ", not 1");
  }
}

}  // namespace

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

HidingDensity::HidingDensity(std::vector<double> probs)
    : labels_(default_labels(probs.size())), probs_(std::move(probs)) {
  check_masses(probs_, "hiding density");
}

HidingDensity::HidingDensity(std::vector<std::string> labels,
                             std::vector<double> probs)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
  if (labels_.size() != probs_.size()) {
    throw InvalidInput("hiding density: " + std::to_string(labels_.size()) +
                       " labels for " + std::to_string(probs_.size()) +
                       " masses");
  }
  check_masses(probs_, "hiding density");
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw InvalidInput("hiding density: duplicate label '" + label + "'");
    }
  }
}

HidingDensity HidingDensity::dropping_zeros(std::vector<std::string> labels,
                                            std::vector<double> probs) {
  if (labels.size() != probs.size()) {
    throw InvalidInput("hiding density: label/mass length mismatch");
  }
  std::vector<std::string> kept_labels;
  std::vector<double> kept;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] == 0.0) continue;
    kept_labels.push_back(std::move(labels[i]));
    kept.push_back(probs[i]);
  }
  return HidingDensity(std::move(kept_labels), std::move(kept));
}

HidingDensity HidingDensity::uniform(std::size_t n) {
  return HidingDensity(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

SearchDensity::SearchDensity(std::vector<double> probs)
    : probs_(std::move(probs)) {
  check_masses(probs_, "search density");
}

SearchDensity SearchDensity::uniform(std::size_t n) {
  return SearchDensity(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

HidingDensity normalize(std::span<const double> weights,
                        std::optional<std::vector<std::string>> labels) {
  if (weights.empty()) throw InvalidInput("normalize: empty weight list");
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i])) {
      throw InvalidInput("normalize: weight " + std::to_string(i + 1) +
                         " is not finite");
    }
    if (weights[i] <= 0.0) {
      throw InvalidInput("normalize: weight " + std::to_string(i + 1) +
                         " is not strictly positive");
    }
    total += weights[i];
  }
  if (!std::isfinite(total)) throw InvalidInput("normalize: weights overflow");
  std::vector<double> probs(weights.begin(), weights.end());
  for (double& m : probs) m /= total;
  if (labels) return HidingDensity(std::move(*labels), std::move(probs));
  return HidingDensity(std::move(probs));
}

}  // namespace boxsearch
