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

#ifndef BOXSEARCH_MONTECARLO_HPP_
#define BOXSEARCH_MONTECARLO_HPP_

#include <cstddef>
#include <cstdint>

#include "boxsearch/density.hpp"

namespace boxsearch {

inline constexpr std::uint64_t kDefaultMaxSteps = 10'000'000;

struct SimResult {
  std::uint64_t trials = 0;
  double mean_work = 0.0;
  double mean_duplicates = 0.0;
  double std_err_work = 0.0;        // sample std / sqrt(trials)
  double std_err_duplicates = 0.0;
  std::uint64_t truncated_trials = 0;

  friend bool operator==(const SimResult&, const SimResult&) = default;
};

// Each trial hides the prize according to p, then opens boxes drawn
// independently from q until the prize box comes up. Work is the number of
// draws; duplicates are draws of a box already opened in that trial. A trial
// that reaches max_steps stops there, contributes its capped counts, and is
// tallied in truncated_trials.
//
// Trial t draws from trial_stream(seed, t) (prize first, then boxes), so the
// result does not depend on `threads`; 0 picks the hardware concurrency.
SimResult simulate_random(const HidingDensity& p, const SearchDensity& q,
                          std::uint64_t trials, std::uint64_t seed,
                          std::uint64_t max_steps = kDefaultMaxSteps,
                          unsigned threads = 0);

// Ideal strategy: work is the prize box's rank in ideal_order(p).
SimResult simulate_ideal(const HidingDensity& p, std::uint64_t trials,
                         std::uint64_t seed, unsigned threads = 0);

}  // namespace boxsearch

#endif  // BOXSEARCH_MONTECARLO_HPP_
