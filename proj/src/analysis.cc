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

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/core.h>

#include "qmarkov/errors.h"

namespace qmarkov {
namespace {

void check_widths(const Distribution& p, const Distribution& q) {
  if (!p.empty() && !q.empty() && p.width() != q.width()) {
    throw ValidationError(
        fmt::format("bitstring length mismatch: {} vs {}", p.width(), q.width()));
  }
}

std::set<std::string> union_keys(const Distribution& p, const Distribution& q) {
  std::set<std::string> keys;
  for (const auto& [bits, v] : p) keys.insert(bits);
  for (const auto& [bits, v] : q) keys.insert(bits);
  return keys;
}

}  // namespace

Distribution counts_to_distribution(const Counts& counts) {
  if (counts.shots() == 0) throw ValidationError("shots must be >= 1");
  Distribution::Map map;
  const double shots = static_cast<double>(counts.shots());
  for (const auto& [bits, n] : counts.map()) map.emplace(bits, static_cast<double>(n) / shots);
  return Distribution(std::move(map));
}

double hellinger_distance(const Distribution& p, const Distribution& q) {
  check_widths(p, q);
  // Iterating the sorted union makes the sum order, and so the result,
  // identical for (p, q) and (q, p).
  double sum = 0.0;
  for (const std::string& bits : union_keys(p, q)) {
    const double d = std::sqrt(p.probability(bits)) - std::sqrt(q.probability(bits));
    sum += d * d;
  }
  return std::min(1.0, std::sqrt(sum / 2.0));
}

double hellinger_fidelity(const Distribution& p, const Distribution& q) {
  return 1.0 - hellinger_distance(p, q);
}

FidelityReport compare_runs(const Distribution& reference, const Distribution& observed) {
  FidelityReport report;
  report.hellinger_distance = hellinger_distance(reference, observed);
  report.hellinger_fidelity = 1.0 - report.hellinger_distance;
  for (const std::string& bits : union_keys(reference, observed)) {
    report.diffs.emplace(bits, std::abs(reference.probability(bits) - observed.probability(bits)));
  }
  return report;
}

FidelityReport compare_runs(const Distribution& reference, const Counts& observed) {
  FidelityReport report = compare_runs(reference, counts_to_distribution(observed));
  report.observed_shots = observed.shots();
  return report;
}

FidelityReport compare_runs(const Counts& reference, const Counts& observed) {
  FidelityReport report =
      compare_runs(counts_to_distribution(reference), counts_to_distribution(observed));
  report.reference_shots = reference.shots();
  report.observed_shots = observed.shots();
  return report;
}

}  // namespace qmarkov
