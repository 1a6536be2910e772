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

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace qmarkov {

/// Time-ordered bitstring of `index`: character k is bit k (qubit q_k), so
/// q0 is the leftmost character.
std::string index_to_bitstring(std::uint64_t index, int width);

/// Inverse of index_to_bitstring. Throws ValidationError on non-binary text.
std::uint64_t bitstring_to_index(std::string_view bits);

/// Reverses character order (time-ordered <-> q0-rightmost).
std::string reverse_bits(std::string_view bits);

/// Probability map over equal-length bitstrings. Absent keys have
/// probability 0. Values are non-negative and sum to 1 within the tolerance
/// given at construction (default 1e-9).
class Distribution {
 public:
  using Map = std::map<std::string, double>;

  static constexpr double kSumTolerance = 1e-9;

  Distribution() = default;
  explicit Distribution(Map probs, double sum_tolerance = kSumTolerance);

  /// Bitstring length; 0 for the empty distribution.
  int width() const { return width_; }
  std::size_t size() const { return probs_.size(); }
  bool empty() const { return probs_.empty(); }
  const Map& map() const { return probs_; }
  Map::const_iterator begin() const { return probs_.begin(); }
  Map::const_iterator end() const { return probs_.end(); }

  double probability(const std::string& bits) const;
  double total() const;

  Distribution with_reversed_bits() const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  Map probs_;
  int width_ = 0;
};

/// Integer shot histogram. Values sum to shots; all keys share one length.
class Counts {
 public:
  using Map = std::map<std::string, std::uint64_t>;

  Counts() = default;
  /// Throws ValidationError if values do not sum to shots, shots is 0, or
  /// keys are malformed.
  Counts(Map counts, std::uint64_t shots);

  int width() const { return width_; }
  std::uint64_t shots() const { return shots_; }
  const Map& map() const { return counts_; }
  std::uint64_t count(const std::string& bits) const;

  Counts with_reversed_bits() const;

  friend bool operator==(const Counts&, const Counts&) = default;

 private:
  Map counts_;
  std::uint64_t shots_ = 0;
  int width_ = 0;
};

}  // namespace qmarkov
