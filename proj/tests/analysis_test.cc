// Copyright 2026 The qmarkov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmarkov/analysis.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "qmarkov/errors.h"
#include "qmarkov/markov.h"
#include "qmarkov/simulator.h"

using namespace qmarkov;

namespace {

// Recorded from seed 7; a regression anchor, not ground truth.
constexpr double kReadoutBaseline = 0.7975647430025482;

Distribution random_distribution(std::mt19937_64& rng, int width) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Distribution::Map map;
  double total = 0.0;
  for (int i = 0; i < (1 << width); ++i) {
    // Sparse supports exercise the union-of-keys path.
    if (unit(rng) < 0.3) continue;
    std::string bits;
    for (int k = 0; k < width; ++k) bits.push_back((i >> k) & 1 ? '1' : '0');
    const double w = unit(rng);
    map[bits] = w;
    total += w;
  }
  if (map.empty()) {
    map[std::string(static_cast<std::size_t>(width), '0')] = 1.0;
    total = 1.0;
  }
  for (auto& [bits, p] : map) p /= total;
  return Distribution(std::move(map));
}

Statevector worked_example_state() {
  return execute(compile_to_circuit(BinaryMarkovChain({0.5, 0.5}, {1.0, 0.0, 0.5, 0.5}, 3)));
}

}  // namespace

TEST(CountsToDistribution, Examples) {
  EXPECT_EQ(counts_to_distribution(Counts({{"0", 8192}}, 8192)).probability("0"), 1.0);

  const Distribution half = counts_to_distribution(Counts({{"00", 4096}, {"11", 4096}}, 8192));
  EXPECT_EQ(half.probability("00"), 0.5);
  EXPECT_EQ(half.probability("11"), 0.5);
  EXPECT_EQ(half.probability("01"), 0.0);

  const Distribution skew = counts_to_distribution(Counts({{"0", 3}, {"1", 1}}, 4));
  EXPECT_EQ(skew.probability("0"), 0.75);
  EXPECT_EQ(skew.probability("1"), 0.25);
}

TEST(CountsToDistribution, ZeroShotsRejected) {
  EXPECT_THROW(Counts({}, 0), ValidationError);
  EXPECT_THROW(counts_to_distribution(Counts()), ValidationError);
  EXPECT_THROW(Counts({{"0", 3}}, 4), ValidationError);
}

TEST(Distribution, Validation) {
  EXPECT_THROW(Distribution({{"0", 0.5}, {"11", 0.5}}), ValidationError);
  EXPECT_THROW(Distribution({{"0", 1.5}, {"1", -0.5}}), ValidationError);
  EXPECT_THROW(Distribution({{"0", 0.5}}), ValidationError);
  EXPECT_THROW(Distribution({{"2", 1.0}}), ValidationError);
  EXPECT_NO_THROW(Distribution({{"0", 0.5 + 1e-10}, {"1", 0.5}}));
}

TEST(Hellinger, Examples) {
  const Distribution p({{"0", 0.5}, {"1", 0.5}});
  const Distribution q({{"0", 1.0}});
  const Distribution r({{"1", 1.0}});

  EXPECT_EQ(hellinger_distance(p, p), 0.0);
  EXPECT_EQ(hellinger_fidelity(p, p), 1.0);
  EXPECT_NEAR(hellinger_distance(q, r), 1.0, 1e-15);
  EXPECT_NEAR(hellinger_fidelity(q, r), 0.0, 1e-15);

  // ||sqrt P - sqrt Q||^2 = (sqrt(0.5) - 1)^2 + 0.5 = 2 - sqrt 2.
  const double expected = std::sqrt((2.0 - std::sqrt(2.0)) / 2.0);
  EXPECT_NEAR(hellinger_distance(p, q), expected, 1e-15);
  EXPECT_NEAR(hellinger_distance(p, q), 0.541196, 1e-6);
  EXPECT_NEAR(hellinger_fidelity(p, q), 0.458804, 1e-6);
}

TEST(Hellinger, WidthMismatch) {
  EXPECT_THROW(hellinger_distance(Distribution({{"0", 1.0}}), Distribution({{"00", 1.0}})),
               ValidationError);
}

TEST(HellingerProperty, MetricBoundsSymmetryComplement) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const int width = 1 + trial % 4;
    const Distribution p = random_distribution(rng, width);
    const Distribution q = random_distribution(rng, width);
    const double h = hellinger_distance(p, q);
    EXPECT_GE(h, 0.0);
    EXPECT_LE(h, 1.0);
    EXPECT_NEAR(h, hellinger_distance(q, p), 1e-15);
    EXPECT_EQ(hellinger_distance(p, p), 0.0);
    EXPECT_NEAR(hellinger_fidelity(p, q) + h, 1.0, 1e-15);
  }
}

TEST(HellingerProperty, TriangleInequality) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 1000; ++trial) {
    const int width = 1 + trial % 3;
    const Distribution p = random_distribution(rng, width);
    const Distribution q = random_distribution(rng, width);
    const Distribution r = random_distribution(rng, width);
    EXPECT_LE(hellinger_distance(p, r), hellinger_distance(p, q) + hellinger_distance(q, r) + 1e-12);
  }
}

TEST(CompareRuns, ExactAgainstItself) {
  const Distribution d = probabilities(worked_example_state());
  const FidelityReport report = compare_runs(d, d);
  EXPECT_EQ(report.hellinger_fidelity, 1.0);
  EXPECT_EQ(report.hellinger_distance, 0.0);
  EXPECT_EQ(report.reference_shots, 0u);
  EXPECT_EQ(report.observed_shots, 0u);
  for (const auto& [bits, diff] : report.diffs) EXPECT_EQ(diff, 0.0);
}

TEST(CompareRuns, UnionOfSupportsInDiffs) {
  const FidelityReport report =
      compare_runs(Distribution({{"00", 1.0}}), Counts({{"00", 3}, {"11", 1}}, 4));
  ASSERT_EQ(report.diffs.size(), 2u);
  EXPECT_EQ(report.diffs.at("00"), 0.25);
  EXPECT_EQ(report.diffs.at("11"), 0.25);
  EXPECT_EQ(report.observed_shots, 4u);
}

TEST(CompareRuns, ReadoutNoiseRegressionBaseline) {
  const Statevector s = worked_example_state();
  const Distribution exact = probabilities(s);
  const Counts noisy = sample_counts(s, 8192, 7, NoiseModel{.readout_flip_prob = 0.05});
  const FidelityReport report = compare_runs(exact, noisy);
  EXPECT_LT(report.hellinger_fidelity, 1.0);
  EXPECT_NEAR(report.hellinger_fidelity, kReadoutBaseline, 1e-12);
  EXPECT_EQ(report.observed_shots, 8192u);
}

TEST(SamplingProperty, FidelityImprovesWithShots) {
  const Statevector s = worked_example_state();
  const Distribution exact = probabilities(s);
  std::vector<double> means;
  for (std::uint64_t shots : {128u, 1024u, 8192u}) {
    double sum = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      sum += hellinger_fidelity(exact, counts_to_distribution(sample_counts(s, shots, seed)));
    }
    means.push_back(sum / 20.0);
  }
  EXPECT_LT(means[0], means[1]);
  EXPECT_LT(means[1], means[2]);
}
