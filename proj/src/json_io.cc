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

#include "qmarkov/json_io.h"

#include <fstream>
#include <sstream>

#include <fmt/core.h>
#include <json.hpp>

#include "qmarkov/errors.h"

namespace qmarkov {
namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key, const char* where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ValidationError(fmt::format("{} is missing \"{}\"", where, key));
  }
  return obj.at(key);
}

double number(const json& obj, const char* key, const char* where) {
  const json& v = field(obj, key, where);
  if (!v.is_number()) throw ValidationError(fmt::format("{}.{} must be a number", where, key));
  return v.get<double>();
}

std::string fmt_double(double x) { return fmt::format("{:.17g}", x); }

template <typename Map, typename Fmt>
void write_object(std::ostringstream& os, const Map& map, const std::string& indent, Fmt&& fmt_value) {
  if (map.empty()) {
    os << "{}";
    return;
  }
  os << "{\n";
  std::size_t i = 0;
  for (const auto& [key, value] : map) {
    os << indent << "  \"" << key << "\": " << fmt_value(value);
    os << (++i < map.size() ? ",\n" : "\n");
  }
  os << indent << "}";
}

}  // namespace

BinaryMarkovChain parse_chain_spec(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) throw ValidationError("chain spec must be a JSON object");

  const json& steps_v = field(doc, "steps", "chain spec");
  if (!steps_v.is_number_integer()) throw ValidationError("chain spec steps must be an integer");
  const long long steps = steps_v.get<long long>();
  if (steps < 1 || steps > 1'000'000) {
    throw ValidationError(fmt::format("chain spec steps = {} must be >= 1", steps));
  }

  const json& initial = field(doc, "initial", "chain spec");
  const double p0 = number(initial, "p0", "initial");
  const json& tr = field(doc, "transition", "chain spec");
  const TransitionMatrix raw{number(tr, "p00", "transition"), number(tr, "p01", "transition"),
                             number(tr, "p10", "transition"), number(tr, "p11", "transition")};

  // Validates at the file tolerance and names the offending row.
  const BinaryMarkovChain loose({p0, 1.0 - p0}, raw, static_cast<int>(steps), kSpecRowTolerance);
  const double row0 = raw.p00 + raw.p01;
  const double row1 = raw.p10 + raw.p11;
  return BinaryMarkovChain(loose.initial(),
                           {raw.p00 / row0, raw.p01 / row0, raw.p10 / row1, raw.p11 / row1},
                           loose.steps());
}

BinaryMarkovChain load_chain_spec(const std::filesystem::path& path) {
  return parse_chain_spec(read_text_file(path));
}

std::string to_json(const Distribution& dist) {
  std::ostringstream os;
  write_object(os, dist.map(), "", fmt_double);
  os << '\n';
  return os.str();
}

std::string to_json(const Counts& counts) {
  std::ostringstream os;
  os << "{\n  \"shots\": " << counts.shots() << ",\n  \"counts\": ";
  write_object(os, counts.map(), "  ", [](std::uint64_t n) { return std::to_string(n); });
  os << "\n}\n";
  return os.str();
}

std::string to_json(const FidelityReport& report) {
  std::ostringstream os;
  os << "{\n  \"distance\": " << fmt_double(report.hellinger_distance)
     << ",\n  \"fidelity\": " << fmt_double(report.hellinger_fidelity) << ",\n  \"diffs\": ";
  write_object(os, report.diffs, "  ", fmt_double);
  os << "\n}\n";
  return os.str();
}

std::variant<Counts, Distribution> parse_result(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) throw ValidationError("result file must be a JSON object");

  if (doc.contains("shots") && doc.contains("counts")) {
    const json& shots = doc.at("shots");
    if (!shots.is_number_unsigned() && !(shots.is_number_integer() && shots.get<long long>() >= 0)) {
      throw ValidationError("shots must be a non-negative integer");
    }
    const json& counts = doc.at("counts");
    if (!counts.is_object()) throw ValidationError("counts must be an object");
    Counts::Map map;
    for (const auto& [bits, v] : counts.items()) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw ValidationError("count for '" + bits + "' must be a non-negative integer");
      }
      map.emplace(bits, v.get<std::uint64_t>());
    }
    return Counts(std::move(map), shots.get<std::uint64_t>());
  }

  Distribution::Map map;
  for (const auto& [bits, v] : doc.items()) {
    if (!v.is_number()) throw ValidationError("probability for '" + bits + "' must be a number");
    map.emplace(bits, v.get<double>());
  }
  return Distribution(std::move(map));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace qmarkov
