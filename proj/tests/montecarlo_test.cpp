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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "boxsearch/error.hpp"
#include "boxsearch/rng.hpp"
#include "boxsearch/work.hpp"
#include "support/test_support.hpp"

namespace boxsearch {
namespace {

const HidingDensity kTwoBox(std::vector<double>{0.75, 0.25});

TEST(SplitMix64Test, ReferenceOutputs) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFull);
  EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ull);
  EXPECT_EQ(rng.next(), 0x06C45D188009454Full);

  SplitMix64 other(1234567);
  EXPECT_EQ(other.next(), 6457827717110365317ull);
  EXPECT_EQ(other.next(), 3203168211198807973ull);
}

TEST(SplitMix64Test, UniformRange) {
  SplitMix64 rng(99);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_EQ(trial_stream(5, 3).next(), SplitMix64(6).next());
}

TEST(SimulateRandomTest, PointMassIsExact) {
  const HidingDensity p(std::vector<double>{1.0});
  const SimResult r = simulate_random(p, SearchDensity::uniform(1), 1000, 7);
  EXPECT_EQ(r.mean_work, 1.0);
  EXPECT_EQ(r.mean_duplicates, 0.0);
  EXPECT_EQ(r.std_err_work, 0.0);
  EXPECT_EQ(r.truncated_trials, 0u);
}

TEST(SimulateRandomTest, UniformTwo) {
  const SimResult r = simulate_random(HidingDensity::uniform(2),
                                      SearchDensity::uniform(2), 1'000'000, 11);
  EXPECT_LE(std::abs(r.mean_work - 2.0), 3.0 * r.std_err_work);
}

TEST(SimulateRandomTest, BestSearchOnTwoBox) {
  const SearchDensity q = best_search_density(kTwoBox);
  const SimResult r = simulate_random(kTwoBox, q, 1'000'000, 42);
  EXPECT_EQ(r.trials, 1'000'000u);
  EXPECT_LE(std::abs(r.mean_work - 1.8660254), 3.0 * r.std_err_work);
  EXPECT_LE(std::abs(r.mean_duplicates - 0.4330127), 3.0 * r.std_err_duplicates);
  // Duplicates law and the W - D bound.
  EXPECT_LE(std::abs(r.mean_duplicates - (r.mean_work - 1.0) / 2.0),
            3.0 * (r.std_err_work + r.std_err_duplicates));
  EXPECT_GE(r.mean_work - r.mean_duplicates,
            ideal_work(kTwoBox) - 3.0 * (r.std_err_work + r.std_err_duplicates));
}

TEST(SimulateRandomTest, WorkMinusDuplicatesBoundsIdealWork) {
  SplitMix64 rng(12);
  for (int t = 0; t < 5; ++t) {
    const auto p = testing::random_density(rng, testing::uniform_int(rng, 2, 12));
    const SimResult r =
        simulate_random(p, best_search_density(p), 100'000, 100 + t);
    EXPECT_GE(r.mean_work - r.mean_duplicates,
              ideal_work(p) - 3.0 * (r.std_err_work + r.std_err_duplicates));
  }
}

TEST(SimulateRandomTest, DeterministicAndThreadIndependent) {
  const auto p = testing::inverse_square(7);
  const SearchDensity q = best_search_density(p);
  const SimResult a = simulate_random(p, q, 100'000, 5, kDefaultMaxSteps, 1);
  const SimResult b = simulate_random(p, q, 100'000, 5, kDefaultMaxSteps, 1);
  const SimResult c = simulate_random(p, q, 100'000, 5, kDefaultMaxSteps, 4);
  const SimResult d = simulate_random(p, q, 100'000, 5, kDefaultMaxSteps, 0);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_EQ(a, d);
  EXPECT_NE(a, simulate_random(p, q, 100'000, 6, kDefaultMaxSteps, 1));
}

TEST(SimulateRandomTest, Truncation) {
  // A search that almost never opens the second box.
  const HidingDensity p = HidingDensity::uniform(2);
  const SearchDensity q(std::vector<double>{1.0 - 1e-12, 1e-12});
  const SimResult r = simulate_random(p, q, 2000, 3, 50);
  EXPECT_GT(r.truncated_trials, 800u);
  EXPECT_LT(r.truncated_trials, 1200u);
  EXPECT_LE(r.mean_work, 50.0);
  EXPECT_THROW(simulate_random(p, q, 10, 3, 0), InvalidInput);
}

TEST(SimulateRandomTest, RejectsBadArguments) {
  EXPECT_THROW(simulate_random(kTwoBox, SearchDensity::uniform(3), 10, 1),
               InvalidInput);
  EXPECT_THROW(simulate_random(kTwoBox, SearchDensity::uniform(2), 0, 1),
               InvalidInput);
}

TEST(SimulateIdealTest, Examples) {
  const HidingDensity point(std::vector<double>{1.0});
  EXPECT_EQ(simulate_ideal(point, 1000, 1).mean_work, 1.0);

  const SimResult two = simulate_ideal(kTwoBox, 1'000'000, 2);
  EXPECT_LE(std::abs(two.mean_work - 1.25), 3.0 * two.std_err_work);
  EXPECT_EQ(two.mean_duplicates, 0.0);

  const SimResult four = simulate_ideal(HidingDensity::uniform(4), 1'000'000, 3);
  EXPECT_LE(std::abs(four.mean_work - 2.5), 3.0 * four.std_err_work);
}

TEST(SimulateIdealTest, ThreadIndependent) {
  const auto p = testing::inverse_square(9);
  EXPECT_EQ(simulate_ideal(p, 70'000, 8, 1), simulate_ideal(p, 70'000, 8, 3));
}

}  // namespace
}  // namespace boxsearch
