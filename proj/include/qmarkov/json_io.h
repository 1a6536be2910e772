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

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "qmarkov/analysis.h"
#include "qmarkov/distribution.h"
#include "qmarkov/markov.h"

namespace qmarkov {

/// Row-sum tolerance applied when loading chain spec files.
inline constexpr double kSpecRowTolerance = 1e-9;

/// Parses {"steps": N, "initial": {"p0": .}, "transition": {"p00": ., "p01":
/// ., "p10": ., "p11": .}}. Rows must sum to 1 within 1e-9 (the error names
/// the offending row); accepted rows are renormalized exactly.
BinaryMarkovChain parse_chain_spec(std::string_view json_text);
BinaryMarkovChain load_chain_spec(const std::filesystem::path& path);

/// {"bitstring": probability, ...}, 17 significant digits.
std::string to_json(const Distribution& dist);

/// {"shots": int, "counts": {"bitstring": int, ...}}.
std::string to_json(const Counts& counts);

/// {"distance": float, "fidelity": float, "diffs": {"bitstring": float}}.
std::string to_json(const FidelityReport& report);

/// Accepts either serialized form above: an object with "shots" and
/// "counts" is read as Counts, any other object as a Distribution.
std::variant<Counts, Distribution> parse_result(std::string_view json_text);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace qmarkov
