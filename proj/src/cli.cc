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

#include "qmarkov/cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "qmarkov/analysis.h"
#include "qmarkov/errors.h"
#include "qmarkov/gates.h"
#include "qmarkov/json_io.h"
#include "qmarkov/markov.h"
#include "qmarkov/simulator.h"

namespace qmarkov::cli {
namespace {

constexpr std::uint64_t kDefaultShots = 8192;

// Exact output drops amplitudes that are pure round-off.
constexpr double kExactCutoff = 1e-15;

constexpr double kGateCheckTolerance = 1e-12;

int max_qubits_from_env() {
  const char* raw = std::getenv("QSIM_MAX_QUBITS");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxQubits;
  const std::string_view text(raw);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1 ||
      value > kAbsoluteMaxQubits) {
    throw ValidationError(fmt::format("QSIM_MAX_QUBITS='{}' must be an integer in [1, {}]", text,
                                      kAbsoluteMaxQubits));
  }
  return value;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw ValidationError("cannot write " + out_path);
  file << text;
}

struct RunConfig {
  std::string spec_path;
  std::uint64_t shots = kDefaultShots;
  bool sample = false;
  std::optional<std::uint64_t> seed;
  NoiseModel noise;
  bool reversed = false;
  std::string out_path;
};

int cmd_compile(const std::string& spec_path, std::ostream& out) {
  const BinaryMarkovChain chain = load_chain_spec(spec_path);
  const Circuit circuit = compile_to_circuit(chain, max_qubits_from_env());
  out << circuit.listing();
  out << fmt::format("# qubits: {}, gates: {}\n", circuit.num_qubits(), circuit.ops().size());
  return kOk;
}

int cmd_run(const RunConfig& cfg, std::ostream& out) {
  cfg.noise.validate();
  if (cfg.shots == 0) throw ValidationError("--shots must be >= 1");
  if (cfg.noise.gate_flip_prob > 0.0 && !cfg.seed) {
    throw ValidationError("--noise-gate requires --seed");
  }
  if (cfg.sample && !cfg.seed) throw ValidationError("sampling requires --seed");
  if (!cfg.sample && cfg.noise.readout_flip_prob > 0.0) {
    throw ValidationError("--noise-readout applies to sampled runs; pass --shots");
  }

  const BinaryMarkovChain chain = load_chain_spec(cfg.spec_path);
  const int max_qubits = max_qubits_from_env();
  const Circuit circuit = compile_to_circuit(chain, max_qubits);
  const Statevector state =
      execute(circuit, cfg.noise, cfg.seed, {.max_qubits = max_qubits, .threads = 0});

  std::string text;
  if (cfg.sample) {
    Counts counts = sample_counts(state, cfg.shots, *cfg.seed, cfg.noise);
    text = to_json(cfg.reversed ? counts.with_reversed_bits() : counts);
  } else {
    Distribution dist = probabilities(state, kExactCutoff);
    text = to_json(cfg.reversed ? dist.with_reversed_bits() : dist);
  }
  emit(text, cfg.out_path, out);
  return kOk;
}

int cmd_oracle(const std::string& spec_path, bool reversed, const std::string& out_path,
               std::ostream& out) {
  const BinaryMarkovChain chain = load_chain_spec(spec_path);
  const PathDistribution paths = enumerate_paths(chain);
  emit(to_json(reversed ? paths.with_reversed_bits() : paths), out_path, out);
  return kOk;
}

Distribution as_distribution(const std::variant<Counts, Distribution>& v) {
  if (const auto* c = std::get_if<Counts>(&v)) return counts_to_distribution(*c);
  return std::get<Distribution>(v);
}

int cmd_fidelity(const std::string& a, const std::string& b, std::ostream& out) {
  const auto lhs = parse_result(read_text_file(a));
  const auto rhs = parse_result(read_text_file(b));
  FidelityReport report = compare_runs(as_distribution(lhs), as_distribution(rhs));
  if (const auto* c = std::get_if<Counts>(&lhs)) report.reference_shots = c->shots();
  if (const auto* c = std::get_if<Counts>(&rhs)) report.observed_shots = c->shots();
  out << to_json(report);
  return kOk;
}

int cmd_gate_check(std::optional<double> lambda, std::optional<double> p0, std::ostream& out) {
  if (lambda.has_value() == p0.has_value()) {
    throw ValidationError("gate-check needs exactly one of --lambda or --p0");
  }
  const RotationOrder order =
      lambda ? RotationOrder::from_lambda(*lambda) : solve_rotation_order(*p0);

  const GateMatrix root = nth_root_x(order);
  const GateSequence root_seq = nth_root_x_sequence(order);
  const double root_err = max_abs_diff(compose_sequence(root_seq, 1), root);

  const GateMatrix controlled = controlled_nth_root_x(order);
  const GateSequence controlled_seq = controlled_nth_root_x_sequence(order);
  const double controlled_err = max_abs_diff(compose_sequence(controlled_seq, 2), controlled);

  out << fmt::format("lambda: {:.17g}\n", order.lambda());
  out << fmt::format("n_equivalent: {:.17g}\n", order.n_equivalent());
  out << "root_x matrix:\n" << root.to_string(12);
  out << "root_x sequence:\n" << format_sequence(root_seq, {0});
  out << fmt::format("root_x max error: {:.3e}\n", root_err);
  out << "controlled_root_x matrix:\n" << controlled.to_string(12);
  out << "controlled_root_x sequence:\n" << format_sequence(controlled_seq, {0, 1});
  out << fmt::format("controlled_root_x max error: {:.3e}\n", controlled_err);

  const bool ok = root_err < kGateCheckTolerance && controlled_err < kGateCheckTolerance;
  out << (ok ? "status: ok\n" : "status: FAILED\n");
  return ok ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compile binary Markov chains to quantum circuits and verify them."};
  app.require_subcommand(1);

  std::string spec_path, out_path, bit_order = "time";
  RunConfig cfg;
  std::uint64_t shots = kDefaultShots, seed = 0;
  std::string file_a, file_b;
  double lambda = 0.0, p0 = 0.0;

  const auto add_bit_order = [&](CLI::App* cmd) {
    cmd->add_option("--bit-order", bit_order, "time (q0 leftmost) or reversed (q0 rightmost)")
        ->check(CLI::IsMember({"time", "reversed"}));
  };

  CLI::App* compile = app.add_subcommand("compile", "Print the compiled circuit");
  compile->add_option("--spec", spec_path, "Chain spec JSON")->required();

  CLI::App* run_cmd = app.add_subcommand("run", "Simulate the compiled circuit");
  run_cmd->add_option("--spec", spec_path, "Chain spec JSON")->required();
  CLI::Option* shots_opt = run_cmd->add_option("--shots", shots, "Sample this many shots");
  CLI::Option* sample_opt = run_cmd->add_flag("--sample", "Sample the default 8192 shots");
  CLI::Option* seed_opt = run_cmd->add_option("--seed", seed, "64-bit RNG seed");
  run_cmd->add_option("--noise-gate", cfg.noise.gate_flip_prob, "X flip probability per gate");
  run_cmd->add_option("--noise-readout", cfg.noise.readout_flip_prob,
                      "Bit flip probability per measured bit");
  run_cmd->add_option("--out", out_path, "Output file (default stdout)");
  add_bit_order(run_cmd);

  CLI::App* oracle = app.add_subcommand("oracle", "Enumerate path probabilities classically");
  oracle->add_option("--spec", spec_path, "Chain spec JSON")->required();
  oracle->add_option("--out", out_path, "Output file (default stdout)");
  add_bit_order(oracle);

  CLI::App* fidelity = app.add_subcommand("fidelity", "Hellinger fidelity between two results");
  fidelity->add_option("a", file_a, "Counts or distribution JSON")->required();
  fidelity->add_option("b", file_b, "Counts or distribution JSON")->required();

  CLI::App* gate_check = app.add_subcommand("gate-check", "Verify the gate decompositions");
  CLI::Option* lambda_opt = gate_check->add_option("--lambda", lambda, "Rotation angle in radians");
  CLI::Option* p0_opt = gate_check->add_option("--p0", p0, "Target P(|0>)");

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (compile->parsed()) return cmd_compile(spec_path, out);
    if (run_cmd->parsed()) {
      cfg.spec_path = spec_path;
      cfg.shots = shots;
      cfg.sample = shots_opt->count() > 0 || sample_opt->count() > 0;
      if (seed_opt->count() > 0) cfg.seed = seed;
      cfg.reversed = bit_order == "reversed";
      cfg.out_path = out_path;
      return cmd_run(cfg, out);
    }
    if (oracle->parsed()) return cmd_oracle(spec_path, bit_order == "reversed", out_path, out);
    if (fidelity->parsed()) return cmd_fidelity(file_a, file_b, out);
    if (gate_check->parsed()) {
      return cmd_gate_check(lambda_opt->count() ? std::optional(lambda) : std::nullopt,
                            p0_opt->count() ? std::optional(p0) : std::nullopt, out);
    }
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kValidation;
}

}  // namespace qmarkov::cli
