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

#include <optional>
#include <string>
#include <vector>

#include "qmarkov/gate_matrix.h"
#include "qmarkov/gates.h"

namespace qmarkov {

/// A gate placed on concrete qubits. Standard gates keep their name and
/// angle for listing; arbitrary unitaries have no name.
struct Operation {
  std::optional<GateName> name;
  double angle = 0.0;
  GateMatrix matrix;
  std::vector<int> qubits;  // (target) or (control, target)

  friend bool operator==(const Operation&, const Operation&) = default;
};

/// Ordered gate list over a fixed-width register. Operations run strictly in
/// insertion order.
class Circuit {
 public:
  explicit Circuit(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Operation>& ops() const { return ops_; }
  bool measure_all() const { return measure_all_; }
  void set_measure_all(bool value) { measure_all_ = value; }

  /// Appends a standard gate. Validates arity, indices and angle presence.
  void add(GateName name, std::vector<int> qubits, std::optional<double> angle = std::nullopt);

  /// Appends an arbitrary 2x2 or 4x4 unitary.
  void add_unitary(const GateMatrix& matrix, std::vector<int> qubits);

  /// Appends every step of `seq`, mapping local role r to qubits[r].
  void append(const GateSequence& seq, const std::vector<int>& qubits);

  /// One line per operation (`H q0`, `U1 <radians> q1`, `CNOT q0 q1`,
  /// `X q0`; arbitrary unitaries print as `UNITARY q...`).
  std::string listing() const;

 private:
  void check_qubits(const std::vector<int>& qubits, std::size_t arity) const;

  int num_qubits_;
  std::vector<Operation> ops_;
  bool measure_all_ = false;
};

}  // namespace qmarkov
