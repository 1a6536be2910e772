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

#include "qmarkov/simulator.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <fmt/core.h>

#include "qmarkov/errors.h"
#include "qmarkov/rng.h"

namespace qmarkov {

void NoiseModel::validate() const {
  const auto check = [](const char* what, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ValidationError(fmt::format("{} = {} outside [0, 1]", what, p));
    }
  };
  check("gate flip probability", gate_flip_prob);
  check("readout flip probability", readout_flip_prob);
}

Statevector execute(const Circuit& circuit, const std::optional<NoiseModel>& noise,
                    std::optional<std::uint64_t> seed, const ExecuteOptions& options) {
  const bool gate_noise = noise && (noise->validate(), noise->gate_flip_prob > 0.0);
  if (gate_noise && !seed) throw ValidationError("noisy execution requires a seed");

  Statevector state(circuit.num_qubits(), options.max_qubits);
  state.set_threads(options.threads);
  std::optional<Rng> rng;
  if (gate_noise) rng.emplace(*seed);

  for (const Operation& op : circuit.ops()) {
    // Permutation and diagonal gates skip the dense kernels.
    if (op.name == GateName::kX) {
      state.apply_x(op.qubits[0]);
    } else if (op.name == GateName::kCNOT) {
      state.apply_cnot(op.qubits[0], op.qubits[1]);
    } else if (op.name == GateName::kU1) {
      state.apply_phase(op.matrix(1, 1), op.qubits[0]);
    } else if (op.qubits.size() == 1) {
      state.apply_single(op.matrix, op.qubits[0]);
    } else {
      state.apply_two(op.matrix, op.qubits[0], op.qubits[1]);
    }
    if (gate_noise) {
      for (int q : op.qubits) {
        if (rng->bernoulli(noise->gate_flip_prob)) state.apply_x(q);
      }
    }
  }
  return state;
}

std::vector<double> probability_vector(const Statevector& state) {
  std::vector<double> probs(state.size());
  const auto amps = state.amplitudes();
  std::transform(amps.begin(), amps.end(), probs.begin(),
                 [](const Complex& a) { return std::norm(a); });
  return probs;
}

Distribution probabilities(const Statevector& state, double cutoff) {
  const std::vector<double> probs = probability_vector(state);
  Distribution::Map map;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] > cutoff) map.emplace_hint(map.end(), index_to_bitstring(i, state.num_qubits()), probs[i]);
  }
  return Distribution(std::move(map));
}

Counts sample_counts(const Statevector& state, std::uint64_t shots, std::uint64_t seed,
                     const std::optional<NoiseModel>& noise) {
  if (shots == 0) throw ValidationError("shots must be >= 1");
  if (noise) noise->validate();
  const double flip = noise ? noise->readout_flip_prob : 0.0;

  std::vector<double> cumulative = probability_vector(state);
  std::partial_sum(cumulative.begin(), cumulative.end(), cumulative.begin());
  const double total = cumulative.back();

  Rng rng(seed);
  std::map<std::uint64_t, std::uint64_t> by_index;
  const int n = state.num_qubits();
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    std::uint64_t outcome = static_cast<std::uint64_t>(it - cumulative.begin());
    if (flip > 0.0) {
      for (int k = 0; k < n; ++k) {
        if (rng.bernoulli(flip)) outcome ^= std::uint64_t{1} << k;
      }
    }
    ++by_index[outcome];
  }

  Counts::Map counts;
  for (const auto& [index, c] : by_index) counts.emplace(index_to_bitstring(index, n), c);
  return Counts(std::move(counts), shots);
}

}  // namespace qmarkov
