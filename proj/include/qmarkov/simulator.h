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

#include <cstdint>
#include <optional>
#include <vector>

#include "qmarkov/circuit.h"
#include "qmarkov/distribution.h"
#include "qmarkov/statevector.h"

namespace qmarkov {

/// Parametric noise applied by stochastic gate insertion, so the simulated
/// state stays pure.
///
/// gate_flip_prob: after every gate, each qubit the gate touched receives an
///   X independently with this probability.
/// readout_flip_prob: each measured bit is flipped independently with this
///   probability.
struct NoiseModel {
  double gate_flip_prob = 0.0;
  double readout_flip_prob = 0.0;

  /// Throws ValidationError unless both probabilities lie in [0, 1].
  void validate() const;
  bool is_noiseless() const { return gate_flip_prob == 0.0 && readout_flip_prob == 0.0; }
};

struct ExecuteOptions {
  int max_qubits = kDefaultMaxQubits;
  unsigned threads = 1;  // 0 = hardware concurrency
};

/// Runs the circuit from |0...0>, applying operations in list order.
///
/// With a noise model whose gate_flip_prob is nonzero a seed is required;
/// the random draws happen in operation order, then operand order, one
/// uniform per touched qubit. Noiseless execution ignores the seed.
Statevector execute(const Circuit& circuit, const std::optional<NoiseModel>& noise = std::nullopt,
                    std::optional<std::uint64_t> seed = std::nullopt,
                    const ExecuteOptions& options = {});

/// |amplitude|^2 per basis index.
std::vector<double> probability_vector(const Statevector& state);

/// Time-ordered bitstring -> |amplitude|^2, keeping entries with probability
/// strictly greater than `cutoff`.
Distribution probabilities(const Statevector& state, double cutoff = 0.0);

/// Multinomial draw of `shots` outcomes from probabilities(state).
///
/// Each shot consumes one uniform from Rng(seed) and is located by inverse
/// CDF over the basis-index order; with readout noise, each shot then
/// consumes one further uniform per qubit (q0 first). Sampling is serial, so
/// counts depend only on the state, shots and seed.
Counts sample_counts(const Statevector& state, std::uint64_t shots, std::uint64_t seed,
                     const std::optional<NoiseModel>& noise = std::nullopt);

}  // namespace qmarkov
