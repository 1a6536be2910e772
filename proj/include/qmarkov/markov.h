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

#pragma once

#include <array>
#include <string>

#include "qmarkov/circuit.h"
#include "qmarkov/distribution.h"
#include "qmarkov/statevector.h"

namespace qmarkov {

/// Row-stochastic 2x2 transition matrix; p_ij is P(next = j | current = i).
struct TransitionMatrix {
  double p00 = 1.0, p01 = 0.0;
  double p10 = 0.0, p11 = 1.0;

  double operator()(int from, int to) const {
    return from == 0 ? (to == 0 ? p00 : p01) : (to == 0 ? p10 : p11);
  }
};

/// Two-state time-homogeneous Markov chain observed over `steps` time steps.
class BinaryMarkovChain {
 public:
  static constexpr double kTolerance = 1e-12;

  /// Throws ValidationError naming the offending part ("initial
  /// distribution", "transition row 0", "transition row 1", "steps") when an
  /// entry is negative or a row does not sum to 1 within `tolerance`.
  BinaryMarkovChain(std::array<double, 2> initial, TransitionMatrix transition, int steps,
                    double tolerance = kTolerance);

  double initial(int state) const { return initial_[static_cast<std::size_t>(state)]; }
  const std::array<double, 2>& initial() const { return initial_; }
  const TransitionMatrix& transition() const { return transition_; }
  double transition(int from, int to) const { return transition_(from, to); }
  int steps() const { return steps_; }

 private:
  std::array<double, 2> initial_;
  TransitionMatrix transition_;
  int steps_;
};

/// Path distribution over time-ordered bitstrings s_0 s_1 ... s_{N-1}.
using PathDistribution = Distribution;

/// Builds the entangled qubit chain for `chain`: qubit q_t holds the state at
/// time t.
///
/// Layout:
///   q0: [H, U1, H] rotation with P(|0>) = initial(0);
///   for each pair (q_t, q_{t+1}): the controlled root-of-X block with
///     P(target = 1 | control = 1) = p11, followed, when p01 > 0, by the
///     anti-controlled block with P(target = 1 | control = 0) = p01.
/// Every pair block uses the same angles. Throws CapacityError when
/// steps > max_qubits.
Circuit compile_to_circuit(const BinaryMarkovChain& chain, int max_qubits = kDefaultMaxQubits);

/// Exhaustive path enumeration: P(s) = initial(s_0) * prod_t p_{s_t s_{t+1}}.
/// Paths of probability 0 are omitted. Throws CapacityError when steps > 24.
PathDistribution enumerate_paths(const BinaryMarkovChain& chain);

/// Row vector initial * P^n. Throws IndexError unless 0 <= n < steps.
std::array<double, 2> marginal(const BinaryMarkovChain& chain, int n);

/// Probability that an N-strain virus, mutating with probability alpha per
/// generation to a uniformly chosen other strain, carries its original strain
/// at generation n: 1/N + (1 - 1/N) (1 - alpha N / (N - 1))^n.
double return_probability(double alpha, int n, int strains);

struct HittingStats {
  double probability;  // from the other state
  double mean_time;    // from the other state; +inf when never hit
};

/// Hitting probability and mean hitting time of `absorbing_state` starting
/// from the other state (minimal non-negative solution of the 2-state
/// system). Throws ValidationError if the state is not absorbing.
HittingStats hitting_stats(const BinaryMarkovChain& chain, int absorbing_state);

enum class StateClass { kAbsorbing, kRecurrent, kTransient };

std::array<StateClass, 2> classify_states(const BinaryMarkovChain& chain);

std::string to_string(StateClass c);

}  // namespace qmarkov
