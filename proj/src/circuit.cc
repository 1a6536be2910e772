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

#include "qmarkov/circuit.h"

#include <sstream>

#include <fmt/core.h>

#include "qmarkov/errors.h"

namespace qmarkov {

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw CapacityError("circuit needs at least one qubit");
}

void Circuit::check_qubits(const std::vector<int>& qubits, std::size_t arity) const {
  if (qubits.size() != arity) {
    throw ValidationError("gate expects " + std::to_string(arity) + " qubit(s), got " +
                          std::to_string(qubits.size()));
  }
  for (int q : qubits) {
    if (q < 0 || q >= num_qubits_) {
      throw IndexError("qubit index " + std::to_string(q) + " out of range for " +
                       std::to_string(num_qubits_) + "-qubit circuit");
    }
  }
  if (arity == 2 && qubits[0] == qubits[1]) {
    throw ValidationError("control and target must differ");
  }
}

void Circuit::add(GateName name, std::vector<int> qubits, std::optional<double> angle) {
  GateMatrix matrix = standard_gate(name, angle);
  check_qubits(qubits, matrix.num_qubits());
  ops_.push_back({name, angle.value_or(0.0), matrix, std::move(qubits)});
}

void Circuit::add_unitary(const GateMatrix& matrix, std::vector<int> qubits) {
  if (!matrix.is_unitary()) throw ValidationError("gate is not unitary");
  check_qubits(qubits, matrix.num_qubits());
  ops_.push_back({std::nullopt, 0.0, matrix, std::move(qubits)});
}

void Circuit::append(const GateSequence& seq, const std::vector<int>& qubits) {
  for (const GateStep& step : seq) {
    std::vector<int> mapped;
    for (int r : step.roles) {
      if (r < 0 || r >= static_cast<int>(qubits.size())) {
        throw IndexError("role " + std::to_string(r) + " has no qubit assignment");
      }
      mapped.push_back(qubits[r]);
    }
    add(step.gate, std::move(mapped),
        step.gate == GateName::kU1 ? std::optional<double>(step.angle) : std::nullopt);
  }
}

std::string Circuit::listing() const {
  std::ostringstream os;
  for (const Operation& op : ops_) {
    os << (op.name ? gate_mnemonic(*op.name) : "UNITARY");
    if (op.name == GateName::kU1) os << fmt::format(" {:.17g}", op.angle);
    for (int q : op.qubits) os << " q" << q;
    os << '\n';
  }
  return os.str();
}

}  // namespace qmarkov
