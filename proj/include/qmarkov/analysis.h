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
#include <map>
#include <string>

#include "qmarkov/distribution.h"

namespace qmarkov {

/// Empirical distribution: each count divided by shots.
Distribution counts_to_distribution(const Counts& counts);

/// Classical Hellinger distance h(P, Q) = (1/sqrt 2) ||sqrt P - sqrt Q||_2,
/// taken over the union of both supports (absent keys are 0). Result is in
/// [0, 1]. Throws ValidationError when bitstring widths differ.
double hellinger_distance(const Distribution& p, const Distribution& q);

/// 1 - hellinger_distance(p, q).
double hellinger_fidelity(const Distribution& p, const Distribution& q);

struct FidelityReport {
  double hellinger_distance = 0.0;
  double hellinger_fidelity = 1.0;
  std::map<std::string, double> diffs;  // |p(b) - q(b)| over the union of supports
  std::uint64_t reference_shots = 0;    // 0 for exact distributions
  std::uint64_t observed_shots = 0;
};

FidelityReport compare_runs(const Distribution& reference, const Distribution& observed);
FidelityReport compare_runs(const Distribution& reference, const Counts& observed);
FidelityReport compare_runs(const Counts& reference, const Counts& observed);

}  // namespace qmarkov
