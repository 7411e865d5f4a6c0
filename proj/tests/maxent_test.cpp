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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "boxsearch/error.hpp"
#include "boxsearch/work.hpp"
#include "support/test_support.hpp"

namespace boxsearch {
namespace {

TEST(GeometricDensityTest, Examples) {
  EXPECT_EQ(geometric_density(1.0, 4), HidingDensity::uniform(4));
  const HidingDensity two = geometric_density(1.0 / 3.0, 2);
  EXPECT_NEAR(two[0], 0.75, 1e-15);
  EXPECT_NEAR(two[1], 0.25, 1e-15);
  const HidingDensity three = geometric_density(2.0, 3);
  EXPECT_NEAR(three[0], 1.0 / 7.0, 1e-15);
  EXPECT_NEAR(three[1], 2.0 / 7.0, 1e-15);
  EXPECT_NEAR(three[2], 4.0 / 7.0, 1e-15);
}

TEST(GeometricDensityTest, ExtremeRatiosStayFinite) {
  const HidingDensity big = geometric_density(1e3, 50);
  EXPECT_NEAR(big[49], 1.0 - 1e-3, 1e-6);
  const HidingDensity small = geometric_density(1e-3, 50);
  EXPECT_NEAR(small[0], 1.0 - 1e-3, 1e-6);
  EXPECT_THROW(geometric_density(1e-10, 100), DomainError);
}

TEST(GeometricDensityTest, RejectsBadArguments) {
  EXPECT_THROW(geometric_density(0.0, 3), InvalidInput);
  EXPECT_THROW(geometric_density(-1.0, 3), InvalidInput);
  EXPECT_THROW(geometric_density(INFINITY, 3), InvalidInput);
  EXPECT_THROW(geometric_density(NAN, 3), InvalidInput);
  EXPECT_THROW(geometric_density(0.5, 0), InvalidInput);
  EXPECT_THROW(geometric_mean_work(0.0, 3), InvalidInput);
}

TEST(GeometricMeanWorkTest, Examples) {
  for (double x : {0.01, 0.3, 1.0, 2.5, 40.0}) {
    EXPECT_NEAR(geometric_mean_work(x, 2), 2.0 - 1.0 / (1.0 + x), 1e-14);
  }
  EXPECT_EQ(geometric_mean_work(1.0, 5), 3.0);
  EXPECT_NEAR(geometric_mean_work(1.0 / 3.0, 2), 1.25, 1e-15);
}

TEST(GeometricMeanWorkTest, EqualsIdealWorkBelowOne) {
  for (double x : {0.1, 0.5, 0.9, 1.0}) {
    EXPECT_NEAR(geometric_mean_work(x, 7), ideal_work(geometric_density(x, 7)),
                1e-12);
  }
  // Above one the masses increase, so the mean overshoots the ideal work.
  EXPECT_GT(geometric_mean_work(2.0, 3), ideal_work(geometric_density(2.0, 3)));
}

TEST(GeometricMeanWorkTest, StrictlyIncreasing) {
  for (std::size_t n = 2; n <= 10; ++n) {
    double prev = geometric_mean_work(0.01, n);
    EXPECT_GT(prev, 1.0);
    for (int i = 1; i <= 400; ++i) {
      // Log-spaced grid from 0.01 to 100.
      const double x = 0.01 * std::pow(1e4, i / 400.0);
      const double cur = geometric_mean_work(x, n);
      EXPECT_GT(cur, prev) << "n=" << n << " x=" << x;
      prev = cur;
    }
    EXPECT_LT(prev, static_cast<double>(n));
  }
}

TEST(LogConvexityTest, SecondDifferenceNonNegative) {
  const double h = 1e-3;
  for (std::size_t n : {2u, 3u, 5u, 10u, 40u}) {
    auto log_f = [n](double z) {
      // log sum_{k=1..n} e^{kz}, shifted by the largest exponent.
      const double top = z >= 0.0 ? static_cast<double>(n) * z : z;
      double s = 0.0;
      for (std::size_t k = 1; k <= n; ++k) {
        s += std::exp(static_cast<double>(k) * z - top);
      }
      return top + std::log(s);
    };
    for (double z = -5.0; z <= 5.0; z += 0.05) {
      const double d2 = log_f(z + h) - 2.0 * log_f(z) + log_f(z - h);
      EXPECT_GE(d2, -1e-8) << "n=" << n << " z=" << z;
    }
  }
}

TEST(SolveXForWorkTest, Examples) {
  EXPECT_NEAR(solve_x_for_work(1.5, 2), 1.0, 1e-12);
  EXPECT_NEAR(solve_x_for_work(1.25, 2), 1.0 / 3.0, 1e-12);
  EXPECT_THROW(solve_x_for_work(1.0, 2), InvalidInput);
  EXPECT_THROW(solve_x_for_work(2.0, 2), InvalidInput);
  EXPECT_THROW(solve_x_for_work(0.5, 2), InvalidInput);
  EXPECT_THROW(solve_x_for_work(NAN, 3), InvalidInput);
  EXPECT_THROW(solve_x_for_work(1.5, 1), InvalidInput);
}

TEST(SolveXForWorkTest, ResidualOnGrid) {
  for (std::size_t n : {2u, 3u, 5u, 10u, 100u, 1000u}) {
    const double top = static_cast<double>(n);
    for (int i = 1; i < 50; ++i) {
      const double w = 1.0 + (top - 1.0) * i / 50.0;
      const GeometricFamilyPoint pt = solve_family_point(w, n);
      EXPECT_LT(std::abs(pt.mean_work - w), 1e-10) << "n=" << n << " w=" << w;
      EXPECT_EQ(pt.n, n);
    }
    for (double w : {1.0 + 1e-6, top - 1e-6}) {
      EXPECT_LT(std::abs(geometric_mean_work(solve_x_for_work(w, n), n) - w),
                1e-10);
    }
  }
}

TEST(MaxentDensityTest, Examples) {
  const HidingDensity p = maxent_density(1.25, 2);
  EXPECT_NEAR(p[0], 0.75, 1e-12);
  EXPECT_NEAR(p[1], 0.25, 1e-12);
  const HidingDensity u = maxent_density(3.0, 5);
  for (double v : u.probs()) EXPECT_NEAR(v, 0.2, 1e-12);
}

TEST(MaxentDensityTest, MeanMatches) {
  for (std::size_t n : {3u, 7u, 20u}) {
    for (double frac : {0.1, 0.4, 0.7, 0.95}) {
      const double w = 1.0 + frac * (static_cast<double>(n) - 1.0);
      const HidingDensity p = maxent_density(w, n);
      EXPECT_NEAR(testing::mean_index({p.probs().begin(), p.probs().end()}), w, 1e-9);
    }
  }
}

TEST(MaxentDensityTest, BeatsRandomDensitiesWithTheSameMean) {
  SplitMix64 rng(2024);
  for (std::size_t n : {3u, 4u, 5u}) {
    for (double frac : {0.15, 0.35, 0.5, 0.8}) {
      const double w = 1.0 + frac * (static_cast<double>(n) - 1.0);
      const HidingDensity best = maxent_density(w, n);
      const double h_best = entropy(best);
      EXPECT_LE(h_best, entropy_upper_bound(w) + 1e-12);
      for (int t = 0; t < 500; ++t) {
        const std::vector<double> q =
            t % 5 == 0 ? testing::perturbed_maxent(rng, best, rng.uniform())
                       : testing::random_with_mean(rng, n, w);
        ASSERT_NEAR(testing::mean_index(q), w, 1e-12);
        EXPECT_LE(testing::shannon(q), h_best + 1e-9);
      }
    }
  }
}

TEST(MaxentDensityTest, EntropyInequalityOnGrid) {
  // h(q) <= -w log a + log sum_{i<=n} a^i for every a > 0 and every q with
  // mean w.
  SplitMix64 rng(77);
  for (std::size_t n : {2u, 3u, 6u, 12u}) {
    for (int t = 0; t < 40; ++t) {
      const double w = 1.0 + (static_cast<double>(n) - 1.0) *
                                 (0.02 + 0.96 * rng.uniform());
      const std::vector<double> q = testing::random_with_mean(rng, n, w);
      const double h = testing::shannon(q);
      for (int j = -40; j <= 40; ++j) {
        const double a = std::pow(10.0, j / 20.0);
        double s = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
          s += std::pow(a, static_cast<double>(i));
        }
        EXPECT_LE(h, -w * std::log(a) + std::log(s) + 1e-12);
      }
    }
  }
}

TEST(EntropyUpperBoundTest, Examples) {
  EXPECT_EQ(entropy_upper_bound(1.0), 0.0);
  EXPECT_NEAR(entropy_upper_bound(2.0), std::log(4.0), 1e-15);
  EXPECT_NEAR(entropy_upper_bound(1.25), 0.62550302942273485, 1e-15);
  EXPECT_THROW(entropy_upper_bound(0.99), InvalidInput);
  EXPECT_THROW(entropy_upper_bound(NAN), InvalidInput);
}

TEST(EntropyUpperBoundTest, AttainedByLimitingFamily) {
  for (double x : {0.05, 0.3, 0.6, 0.9}) {
    const LimitingStats s = limiting_family_stats(x);
    EXPECT_NEAR(entropy_upper_bound(s.work), s.entropy, 1e-12);
  }
}

TEST(LimitingFamilyStatsTest, Examples) {
  const LimitingStats half = limiting_family_stats(0.5);
  EXPECT_DOUBLE_EQ(half.work, 2.0);
  EXPECT_NEAR(half.entropy, 2.0 * std::log(2.0), 1e-15);

  const LimitingStats tiny = limiting_family_stats(1e-12);
  EXPECT_NEAR(tiny.work, 1.0, 1e-11);
  EXPECT_NEAR(tiny.entropy, 0.0, 1e-10);

  const LimitingStats near_one = limiting_family_stats(0.99);
  const double gap = near_one.entropy - std::log(near_one.work);
  EXPECT_GT(gap, 0.9);
  EXPECT_LT(gap, 1.0);
  EXPECT_NEAR(gap, 0.99498, 1e-5);

  EXPECT_THROW(limiting_family_stats(0.0), InvalidInput);
  EXPECT_THROW(limiting_family_stats(1.0), InvalidInput);
}

TEST(LimitingFamilyStatsTest, FiniteFamilyConverges) {
  const double x = 0.7;
  const LimitingStats s = limiting_family_stats(x);
  const HidingDensity p = geometric_density(x, 200);
  EXPECT_NEAR(ideal_work(p), s.work, 1e-10);
  EXPECT_NEAR(entropy(p), s.entropy, 1e-10);
}

}  // namespace
}  // namespace boxsearch
