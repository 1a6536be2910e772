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

#include "qmarkov/distribution.h"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "qmarkov/errors.h"

namespace qmarkov {
namespace {

// Checks key shape and returns the common width.
template <typename M>
int common_width(const M& map) {
  int width = -1;
  for (const auto& [bits, value] : map) {
    if (bits.empty()) throw ValidationError("empty bitstring key");
    if (bits.find_first_not_of("01") != std::string::npos) {
      throw ValidationError("bitstring key '" + bits + "' contains characters other than 0/1");
    }
    if (width == -1) {
      width = static_cast<int>(bits.size());
    } else if (width != static_cast<int>(bits.size())) {
      throw ValidationError(fmt::format("bitstring key '{}' has length {}, expected {}", bits,
                                        bits.size(), width));
    }
  }
  return std::max(width, 0);
}

}  // namespace

std::string index_to_bitstring(std::uint64_t index, int width) {
  std::string bits(static_cast<std::size_t>(width), '0');
  for (int k = 0; k < width; ++k) {
    if ((index >> k) & 1u) bits[static_cast<std::size_t>(k)] = '1';
  }
  return bits;
}

std::uint64_t bitstring_to_index(std::string_view bits) {
  if (bits.size() > 64) throw ValidationError("bitstring longer than 64 characters");
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1') {
      index |= std::uint64_t{1} << k;
    } else if (bits[k] != '0') {
      throw ValidationError("bitstring contains characters other than 0/1");
    }
  }
  return index;
}

std::string reverse_bits(std::string_view bits) { return std::string(bits.rbegin(), bits.rend()); }

Distribution::Distribution(Map probs, double sum_tolerance) : probs_(std::move(probs)) {
  width_ = common_width(probs_);
  for (const auto& [bits, p] : probs_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw ValidationError(fmt::format("probability of '{}' is {}, must be finite and >= 0", bits, p));
    }
  }
  if (std::abs(total() - 1.0) > sum_tolerance) {
    throw ValidationError(fmt::format("probabilities sum to {:.17g}, expected 1", total()));
  }
}

double Distribution::probability(const std::string& bits) const {
  const auto it = probs_.find(bits);
  return it == probs_.end() ? 0.0 : it->second;
}

double Distribution::total() const {
  double sum = 0.0;
  for (const auto& [bits, p] : probs_) sum += p;
  return sum;
}

Distribution Distribution::with_reversed_bits() const {
  Map out;
  for (const auto& [bits, p] : probs_) out.emplace(reverse_bits(bits), p);
  Distribution d;
  d.probs_ = std::move(out);
  d.width_ = width_;
  return d;
}

Counts::Counts(Map counts, std::uint64_t shots) : counts_(std::move(counts)), shots_(shots) {
  if (shots == 0) throw ValidationError("shots must be >= 1");
  width_ = common_width(counts_);
  std::uint64_t sum = 0;
  for (const auto& [bits, n] : counts_) sum += n;
  if (sum != shots) {
    throw ValidationError(fmt::format("counts sum to {}, expected shots = {}", sum, shots));
  }
}

std::uint64_t Counts::count(const std::string& bits) const {
  const auto it = counts_.find(bits);
  return it == counts_.end() ? 0 : it->second;
}

Counts Counts::with_reversed_bits() const {
  Map out;
  for (const auto& [bits, n] : counts_) out.emplace(reverse_bits(bits), n);
  return Counts(std::move(out), shots_);
}

}  // namespace qmarkov
