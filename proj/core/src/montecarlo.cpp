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

#include "boxsearch/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "boxsearch/error.hpp"
#include "boxsearch/rng.hpp"
#include "boxsearch/work.hpp"

namespace boxsearch {
namespace {

constexpr std::uint64_t kBlockTrials = 1 << 14;

// Running mean and sum of squared deviations; merged pairwise (Chan et al.).
struct Moments {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    count += 1.0;
    const double delta = x - mean;
    mean += delta / count;
    m2 += delta * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.count == 0.0) return;
    const double n = count + o.count;
    const double delta = o.mean - mean;
    mean += delta * o.count / n;
    m2 += o.m2 + delta * delta * count * o.count / n;
    count = n;
  }

  double std_err() const {
    if (count < 2.0) return 0.0;
    return std::sqrt(m2 / (count - 1.0) / count);
  }
};

struct BlockStats {
  Moments work;
  Moments dups;
  std::uint64_t truncated = 0;
};

class CdfSampler {
 public:
  explicit CdfSampler(std::span<const double> probs) : cdf_(probs.size()) {
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      acc += probs[i];
      cdf_[i] = acc;
    }
  }

  std::size_t operator()(SplitMix64& rng) const {
    const double u = rng.uniform() * cdf_.back();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return std::min<std::size_t>(it - cdf_.begin(), cdf_.size() - 1);
  }

 private:
  std::vector<double> cdf_;
};

// Runs blocks of trials on `threads` workers. `run_block(first, last, out)`
// must depend only on its trial range.
template <typename RunBlock>
SimResult run_blocks(std::uint64_t trials, unsigned threads,
                     const RunBlock& run_block) {
  if (trials == 0) throw InvalidInput("simulation needs at least one trial");
  const std::uint64_t blocks = (trials + kBlockTrials - 1) / kBlockTrials;
  std::vector<BlockStats> stats(blocks);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, blocks));

  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      const std::uint64_t first = b * kBlockTrials;
      const std::uint64_t last = std::min(trials, first + kBlockTrials);
      run_block(first, last, stats[b]);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  BlockStats total;
  for (const BlockStats& s : stats) {
    total.work.merge(s.work);
    total.dups.merge(s.dups);
    total.truncated += s.truncated;
  }
  SimResult r;
  r.trials = trials;
  r.mean_work = total.work.mean;
  r.mean_duplicates = total.dups.mean;
  r.std_err_work = total.work.std_err();
  r.std_err_duplicates = total.dups.std_err();
  r.truncated_trials = total.truncated;
  return r;
}

}  // namespace

SimResult simulate_random(const HidingDensity& p, const SearchDensity& q,
                          std::uint64_t trials, std::uint64_t seed,
                          std::uint64_t max_steps, unsigned threads) {
  if (p.size() != q.size()) {
    throw InvalidInput("simulate_random: search density has " +
                       std::to_string(q.size()) + " boxes, hiding density " +
                       std::to_string(p.size()));
  }
  if (max_steps == 0) throw InvalidInput("simulate_random: max_steps is 0");
  const CdfSampler hide(p.probs());
  const CdfSampler search(q.probs());
  const std::size_t n = p.size();

  return run_blocks(trials, threads, [&](std::uint64_t first,
                                         std::uint64_t last, BlockStats& out) {
    // opened[i] == trial + 1 iff box i was opened during `trial`.
    std::vector<std::uint64_t> opened(n, 0);
    for (std::uint64_t trial = first; trial < last; ++trial) {
      SplitMix64 rng = trial_stream(seed, trial);
      const std::size_t prize = hide(rng);
      const std::uint64_t stamp = trial + 1;
      std::uint64_t steps = 0;
      std::uint64_t dups = 0;
      bool found = false;
      while (steps < max_steps) {
        const std::size_t box = search(rng);
        ++steps;
        if (opened[box] == stamp) {
          ++dups;
        } else {
          opened[box] = stamp;
        }
        if (box == prize) {
          found = true;
          break;
        }
      }
      if (!found) ++out.truncated;
      out.work.add(static_cast<double>(steps));
      out.dups.add(static_cast<double>(dups));
    }
  });
}

SimResult simulate_ideal(const HidingDensity& p, std::uint64_t trials,
                         std::uint64_t seed, unsigned threads) {
  const auto order = ideal_order(p);
  std::vector<double> rank(p.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    rank[order[j]] = static_cast<double>(j + 1);
  }
  const CdfSampler hide(p.probs());

  return run_blocks(trials, threads, [&](std::uint64_t first,
                                         std::uint64_t last, BlockStats& out) {
    for (std::uint64_t trial = first; trial < last; ++trial) {
      SplitMix64 rng = trial_stream(seed, trial);
      out.work.add(rank[hide(rng)]);
      out.dups.add(0.0);
    }
  });
}

}  // namespace boxsearch
