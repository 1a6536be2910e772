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

#include <fmt/core.h>

#include "qmarkov/errors.h"
#include "qmarkov/gates.h"

namespace qmarkov {
namespace {

constexpr int kMaxEnumerationSteps = 24;

void check_row(const char* name, double a, double b, double tol) {
  if (!std::isfinite(a) || !std::isfinite(b) || a < 0.0 || b < 0.0) {
    throw ValidationError(fmt::format("{} has a negative or non-finite entry ({}, {})", name, a, b));
  }
  if (std::abs(a + b - 1.0) > tol) {
    throw ValidationError(fmt::format("{} sums to {:.17g}, expected 1", name, a + b));
  }
}

bool is_absorbing(const BinaryMarkovChain& chain, int state) {
  return std::abs(chain.transition(state, state) - 1.0) <= BinaryMarkovChain::kTolerance;
}

void enumerate(const BinaryMarkovChain& chain, std::string& path, double prob,
               Distribution::Map& out) {
  if (static_cast<int>(path.size()) == chain.steps()) {
    out.emplace(path, prob);
    return;
  }
  const int last = path.back() - '0';
  for (int next = 0; next < 2; ++next) {
    const double p = prob * chain.transition(last, next);
    if (p == 0.0) continue;
    path.push_back(static_cast<char>('0' + next));
    enumerate(chain, path, p, out);
    path.pop_back();
  }
}

}  // namespace

BinaryMarkovChain::BinaryMarkovChain(std::array<double, 2> initial, TransitionMatrix transition,
                                     int steps, double tolerance)
    : initial_(initial), transition_(transition), steps_(steps) {
  if (steps < 1) throw ValidationError(fmt::format("steps = {} must be >= 1", steps));
  check_row("initial distribution", initial[0], initial[1], tolerance);
  check_row("transition row 0", transition.p00, transition.p01, tolerance);
  check_row("transition row 1", transition.p10, transition.p11, tolerance);
}

Circuit compile_to_circuit(const BinaryMarkovChain& chain, int max_qubits) {
  const int n = chain.steps();
  if (n > max_qubits) {
    throw CapacityError(fmt::format("{} steps exceed the {}-qubit capacity", n, max_qubits));
  }
  Circuit circuit(n);
  circuit.append(nth_root_x_sequence(solve_rotation_order(chain.initial(0))), {0});

  // Solver input is P(target = 0), hence 1 - p.
  const GateSequence on_one = controlled_nth_root_x_sequence(solve_rotation_order(1.0 - chain.transition(1, 1)));
  const bool leaves_zero = chain.transition(0, 1) > 0.0;
  const GateSequence on_zero =
      leaves_zero ? anti_controlled_sequence(solve_rotation_order(1.0 - chain.transition(0, 1)))
                  : GateSequence{};
  for (int t = 0; t + 1 < n; ++t) {
    circuit.append(on_one, {t, t + 1});
    if (leaves_zero) circuit.append(on_zero, {t, t + 1});
  }
  circuit.set_measure_all(true);
  return circuit;
}

PathDistribution enumerate_paths(const BinaryMarkovChain& chain) {
  if (chain.steps() > kMaxEnumerationSteps) {
    throw CapacityError(fmt::format("path enumeration supports at most {} steps, got {}",
                                    kMaxEnumerationSteps, chain.steps()));
  }
  Distribution::Map out;
  std::string path;
  path.reserve(static_cast<std::size_t>(chain.steps()));
  for (int s0 = 0; s0 < 2; ++s0) {
    if (chain.initial(s0) == 0.0) continue;
    path.assign(1, static_cast<char>('0' + s0));
    enumerate(chain, path, chain.initial(s0), out);
  }
  return Distribution(std::move(out));
}

std::array<double, 2> marginal(const BinaryMarkovChain& chain, int n) {
  if (n < 0 || n >= chain.steps()) {
    throw IndexError(fmt::format("step {} outside [0, {})", n, chain.steps()));
  }
  std::array<double, 2> row = chain.initial();
  for (int k = 0; k < n; ++k) {
    row = {row[0] * chain.transition(0, 0) + row[1] * chain.transition(1, 0),
           row[0] * chain.transition(0, 1) + row[1] * chain.transition(1, 1)};
  }
  return row;
}

double return_probability(double alpha, int n, int strains) {
  if (strains < 2) throw DomainError(fmt::format("strains = {} must be >= 2", strains));
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError(fmt::format("mutation probability {} outside [0, 1]", alpha));
  }
  if (n < 0) throw DomainError(fmt::format("generation {} must be >= 0", n));
  const double N = strains;
  return 1.0 / N + (1.0 - 1.0 / N) * std::pow(1.0 - alpha * N / (N - 1.0), n);
}

HittingStats hitting_stats(const BinaryMarkovChain& chain, int absorbing_state) {
  if (absorbing_state != 0 && absorbing_state != 1) {
    throw ValidationError(fmt::format("state {} is not 0 or 1", absorbing_state));
  }
  if (!is_absorbing(chain, absorbing_state)) {
    throw ValidationError(fmt::format("state {} is not absorbing", absorbing_state));
  }
  // From the other state i: h_i = p_ij + p_ii h_i and k_i = 1 + p_ii k_i.
  const int other = 1 - absorbing_state;
  const double escape = chain.transition(other, absorbing_state);
  if (escape <= 0.0) return {0.0, std::numeric_limits<double>::infinity()};
  return {1.0, 1.0 / escape};
}

std::array<StateClass, 2> classify_states(const BinaryMarkovChain& chain) {
  std::array<StateClass, 2> out{};
  for (int j = 0; j < 2; ++j) {
    if (is_absorbing(chain, j)) {
      out[static_cast<std::size_t>(j)] = StateClass::kAbsorbing;
      continue;
    }
    // A non-absorbing state leaks into the other one with positive probability.
    const int other = 1 - j;
    const bool leaks = chain.transition(j, other) > 0.0;
    out[static_cast<std::size_t>(j)] =
        is_absorbing(chain, other) && leaks ? StateClass::kTransient : StateClass::kRecurrent;
  }
  return out;
}

std::string to_string(StateClass c) {
  switch (c) {
    case StateClass::kAbsorbing:
      return "absorbing";
    case StateClass::kRecurrent:
      return "recurrent";
    case StateClass::kTransient:
      return "transient";
  }
  return "?";
}

}  // namespace qmarkov
