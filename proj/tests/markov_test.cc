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

#include "qmarkov/markov.h"

#include <cmath>
#include <limits>
#include <random>

#include "gtest/gtest.h"
#include "qmarkov/errors.h"
#include "qmarkov/simulator.h"
#include "test_util.h"

using namespace qmarkov;

namespace {

BinaryMarkovChain chain(double l0, double p01, double p10, int steps) {
  return BinaryMarkovChain({l0, 1.0 - l0}, {1.0 - p01, p01, p10, 1.0 - p10}, steps);
}

// Brute force over every trajectory, independent of the recursive
// enumerator: product of initial and transition probabilities.
std::map<std::string, double> brute_force_paths(const BinaryMarkovChain& c) {
  std::map<std::string, double> out;
  const int n = c.steps();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::string path;
    for (int t = 0; t < n; ++t) path.push_back((mask >> (n - 1 - t)) & 1 ? '1' : '0');
    double p = c.initial(path[0] - '0');
    for (int t = 0; t + 1 < n; ++t) p *= c.transition(path[t] - '0', path[t + 1] - '0');
    out[path] = p;
  }
  return out;
}

void expect_same(const Distribution& d, const std::map<std::string, double>& ref, double tol) {
  for (const auto& [bits, p] : ref) EXPECT_NEAR(d.probability(bits), p, tol) << bits;
  for (const auto& [bits, p] : d) EXPECT_TRUE(ref.count(bits)) << bits;
}

}  // namespace

TEST(BinaryMarkovChain, ValidationNamesTheRow) {
  try {
    BinaryMarkovChain({0.5, 0.5}, {0.8, 0.1, 0.5, 0.5}, 3);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("transition row 0"), std::string::npos);
  }
  try {
    BinaryMarkovChain({0.5, 0.5}, {1.0, 0.0, 0.5, 0.6}, 3);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("transition row 1"), std::string::npos);
  }
  EXPECT_THROW(BinaryMarkovChain({0.6, 0.6}, {}, 3), ValidationError);
  EXPECT_THROW(BinaryMarkovChain({1.2, -0.2}, {}, 3), ValidationError);
  EXPECT_THROW(BinaryMarkovChain({1.0, 0.0}, {1.5, -0.5, 0.0, 1.0}, 3), ValidationError);
  EXPECT_THROW(BinaryMarkovChain({1.0, 0.0}, {}, 0), ValidationError);
}

TEST(CompileToCircuit, AbsorbingThreeStepShape) {
  const Circuit c = compile_to_circuit(chain(0.3, 0.0, 0.4, 3));
  EXPECT_EQ(c.num_qubits(), 3);
  EXPECT_TRUE(c.measure_all());
  // One [H, U1, H] rotation and two seven-gate controlled blocks.
  ASSERT_EQ(c.ops().size(), 3u + 2u * 7u);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(c.ops()[k].qubits, std::vector<int>{0});
  EXPECT_EQ(c.ops()[5].qubits, (std::vector<int>{0, 1}));
  EXPECT_EQ(c.ops()[12].qubits, (std::vector<int>{1, 2}));
  for (const Operation& op : c.ops()) EXPECT_NE(op.name, GateName::kX);
}

TEST(CompileToCircuit, SingleStep) {
  const Circuit c = compile_to_circuit(chain(0.25, 0.3, 0.4, 1));
  EXPECT_EQ(c.num_qubits(), 1);
  EXPECT_EQ(c.ops().size(), 3u);
  const Distribution d = probabilities(execute(c));
  EXPECT_NEAR(d.probability("0"), 0.25, 1e-12);
  EXPECT_NEAR(d.probability("1"), 0.75, 1e-12);
}

TEST(CompileToCircuit, StartInAbsorbingStateNeverMoves) {
  const Distribution d = probabilities(execute(compile_to_circuit(chain(1.0, 0.0, 0.5, 3))));
  EXPECT_NEAR(d.probability("000"), 1.0, 1e-12);
}

TEST(CompileToCircuit, GeneralChainAddsAntiControlledBlock) {
  const Circuit c = compile_to_circuit(chain(0.3, 0.2, 0.4, 3));
  // Pair block: 7 controlled gates + X, 7, X for the anti-controlled rotation.
  EXPECT_EQ(c.ops().size(), 3u + 2u * 16u);
}

TEST(CompileToCircuit, Capacity) {
  EXPECT_THROW(compile_to_circuit(chain(0.5, 0.1, 0.1, 25)), CapacityError);
  EXPECT_THROW(compile_to_circuit(chain(0.5, 0.1, 0.1, 6), 5), CapacityError);
  EXPECT_NO_THROW(compile_to_circuit(chain(0.5, 0.1, 0.1, 5), 5));
}

TEST(CompileToCircuit, PairBlocksAreTimeHomogeneous) {
  for (double p01 : {0.0, 0.35}) {
    const int n = 6;
    const Circuit c = compile_to_circuit(chain(0.4, p01, 0.7, n));
    const std::size_t block = (c.ops().size() - 3) / (n - 1);
    ASSERT_EQ(3 + block * (n - 1), c.ops().size());
    for (int t = 1; t + 1 < n; ++t) {
      for (std::size_t k = 0; k < block; ++k) {
        const Operation& first = c.ops()[3 + k];
        const Operation& later = c.ops()[3 + t * block + k];
        EXPECT_EQ(later.name, first.name);
        EXPECT_EQ(later.angle, first.angle);
        std::vector<int> shifted = first.qubits;
        for (int& q : shifted) q += t;
        EXPECT_EQ(later.qubits, shifted);
      }
    }
  }
}

TEST(EnumeratePaths, Examples) {
  const Distribution a = enumerate_paths(chain(1.0, 0.0, 0.0, 3));
  EXPECT_EQ(a.size(), 1u);
  EXPECT_EQ(a.probability("000"), 1.0);

  const Distribution b = enumerate_paths(chain(0.5, 0.0, 0.5, 3));
  EXPECT_EQ(b.size(), 4u);
  EXPECT_NEAR(b.probability("000"), 0.5, 1e-15);
  EXPECT_NEAR(b.probability("100"), 0.25, 1e-15);
  EXPECT_NEAR(b.probability("110"), 0.125, 1e-15);
  EXPECT_NEAR(b.probability("111"), 0.125, 1e-15);

  const Distribution c = enumerate_paths(chain(0.0, 0.0, 0.0, 3));
  EXPECT_EQ(c.size(), 1u);
  EXPECT_EQ(c.probability("111"), 1.0);
}

TEST(EnumeratePaths, MatchesBruteForce) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const BinaryMarkovChain c = test_support::random_chain(rng, 1, 10);
    expect_same(enumerate_paths(c), brute_force_paths(c), 1e-15);
  }
}

TEST(EnumeratePaths, Capacity) {
  EXPECT_THROW(enumerate_paths(chain(0.5, 0.5, 0.5, 25)), CapacityError);
}

TEST(Marginal, Examples) {
  const BinaryMarkovChain a = chain(0.3, 0.2, 0.6, 4);
  const auto m0 = marginal(a, 0);
  EXPECT_EQ(m0[0], 0.3);
  EXPECT_EQ(m0[1], 0.7);

  for (double l0 : {0.0, 0.2, 1.0}) {
    const auto m = marginal(chain(l0, 0.5, 0.5, 2), 1);
    EXPECT_NEAR(m[0], 0.5, 1e-15);
    EXPECT_NEAR(m[1], 0.5, 1e-15);
  }

  // p11 = 0.6, p10 = 0.4, p01 = 0.2 from state 1.
  const auto m2 = marginal(chain(0.0, 0.2, 0.4, 3), 2);
  EXPECT_NEAR(m2[1], 0.44, 1e-15);
  EXPECT_NEAR(m2[0], 0.56, 1e-15);
}

TEST(Marginal, OutOfRange) {
  EXPECT_THROW(marginal(chain(0.5, 0.5, 0.5, 3), 3), IndexError);
  EXPECT_THROW(marginal(chain(0.5, 0.5, 0.5, 3), -1), IndexError);
}

TEST(ReturnProbability, Examples) {
  EXPECT_NEAR(return_probability(0.3, 0, 5), 1.0, 1e-15);
  EXPECT_NEAR(return_probability(0.2, 2, 2), 0.68, 1e-15);
  for (int n = 0; n < 10; ++n) EXPECT_NEAR(return_probability(0.0, n, 4), 1.0, 1e-15);
}

TEST(ReturnProbability, MatchesRecurrence) {
  // p(n+1) = (1 - alpha - beta) p(n) + beta, p(0) = 1, beta = alpha / (N - 1).
  for (int strains : {2, 3, 7}) {
    for (double alpha : {0.05, 0.3, 0.9}) {
      const double beta = alpha / (strains - 1);
      double p = 1.0;
      for (int n = 0; n <= 30; ++n) {
        EXPECT_NEAR(return_probability(alpha, n, strains), p, 1e-12);
        p = (1.0 - alpha - beta) * p + beta;
      }
    }
  }
}

TEST(ReturnProbability, Domain) {
  EXPECT_THROW(return_probability(0.1, 3, 1), DomainError);
  EXPECT_THROW(return_probability(1.1, 3, 2), DomainError);
  EXPECT_THROW(return_probability(0.1, -1, 2), DomainError);
}

TEST(HittingStats, Examples) {
  const HittingStats half = hitting_stats(chain(0.5, 0.0, 0.5, 3), 0);
  EXPECT_EQ(half.probability, 1.0);
  EXPECT_DOUBLE_EQ(half.mean_time, 2.0);

  const HittingStats forced = hitting_stats(chain(0.5, 0.0, 1.0, 3), 0);
  EXPECT_EQ(forced.probability, 1.0);
  EXPECT_EQ(forced.mean_time, 1.0);

  const HittingStats never = hitting_stats(chain(0.5, 0.0, 0.0, 3), 0);
  EXPECT_EQ(never.probability, 0.0);
  EXPECT_EQ(never.mean_time, std::numeric_limits<double>::infinity());

  const HittingStats into_one = hitting_stats(chain(0.5, 0.25, 0.0, 3), 1);
  EXPECT_EQ(into_one.probability, 1.0);
  EXPECT_DOUBLE_EQ(into_one.mean_time, 4.0);
}

TEST(HittingStats, MeanTimeMatchesSimulatedAbsorption) {
  // Expected absorption time from state 1 equals sum over t of P(not yet absorbed).
  const double p10 = 0.3;
  double survive = 1.0, expected = 0.0;
  for (int t = 0; t < 2000; ++t) {
    expected += survive;
    survive *= 1.0 - p10;
  }
  EXPECT_NEAR(hitting_stats(chain(0.5, 0.0, p10, 2), 0).mean_time, expected, 1e-9);
}

TEST(HittingStats, RequiresAbsorbingState) {
  EXPECT_THROW(hitting_stats(chain(0.5, 0.1, 0.5, 3), 0), ValidationError);
  EXPECT_THROW(hitting_stats(chain(0.5, 0.0, 0.5, 3), 1), ValidationError);
  EXPECT_THROW(hitting_stats(chain(0.5, 0.0, 0.5, 3), 2), ValidationError);
}

TEST(ClassifyStates, Examples) {
  const auto identity = classify_states(chain(0.5, 0.0, 0.0, 2));
  EXPECT_EQ(identity[0], StateClass::kAbsorbing);
  EXPECT_EQ(identity[1], StateClass::kAbsorbing);

  const auto leaky = classify_states(chain(0.5, 0.0, 0.3, 2));
  EXPECT_EQ(leaky[0], StateClass::kAbsorbing);
  EXPECT_EQ(leaky[1], StateClass::kTransient);

  const auto symmetric = classify_states(chain(0.5, 0.5, 0.5, 2));
  EXPECT_EQ(symmetric[0], StateClass::kRecurrent);
  EXPECT_EQ(symmetric[1], StateClass::kRecurrent);

  const auto flipped = classify_states(chain(0.5, 0.4, 0.0, 2));
  EXPECT_EQ(flipped[0], StateClass::kTransient);
  EXPECT_EQ(flipped[1], StateClass::kAbsorbing);
  EXPECT_EQ(to_string(StateClass::kTransient), "transient");
}

TEST(MarkovProperty, QuantumMatchesClassical) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const BinaryMarkovChain c = test_support::random_chain(rng, 1, 10);
    const Distribution quantum = probabilities(execute(compile_to_circuit(c)));
    expect_same(quantum, brute_force_paths(c), 1e-10);
  }
}

TEST(MarkovProperty, MarginalsMatchPathSums) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const BinaryMarkovChain c = test_support::random_chain(rng, 1, 10);
    const Distribution paths = enumerate_paths(c);
    for (int n = 0; n < c.steps(); ++n) {
      double ones = 0.0, zeros = 0.0;
      for (const auto& [bits, p] : paths) (bits[n] == '1' ? ones : zeros) += p;
      const auto m = marginal(c, n);
      EXPECT_NEAR(m[0], zeros, 1e-10);
      EXPECT_NEAR(m[1], ones, 1e-10);
    }
  }
}

TEST(MarkovProperty, AbsorbingSupport) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(0.01, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const BinaryMarkovChain c = chain(unit(rng), 0.0, unit(rng), 2 + trial % 7);
    const Distribution quantum = probabilities(execute(compile_to_circuit(c)));
    const auto oracle = brute_force_paths(c);
    for (const auto& [bits, p] : oracle) {
      if (bits.find("01") == std::string::npos) continue;
      EXPECT_LE(p, 1e-12);
      EXPECT_LE(quantum.probability(bits), 1e-12) << bits;
    }
  }
}

TEST(MarkovProperty, VirusClosedFormMatchesMarginal) {
  for (int a = 0; a <= 10; ++a) {
    const double alpha = a / 10.0;
    const BinaryMarkovChain c({0.0, 1.0}, {1.0 - alpha, alpha, alpha, 1.0 - alpha}, 21);
    for (int n = 0; n <= 20; ++n) {
      EXPECT_NEAR(return_probability(alpha, n, 2), marginal(c, n)[1], 1e-12);
    }
  }
}
