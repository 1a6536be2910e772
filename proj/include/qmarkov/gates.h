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

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qmarkov/gate_matrix.h"

namespace qmarkov {

enum class GateName { kH, kX, kCNOT, kU1 };

/// Canonical matrix of a standard gate. `angle` must be given for U1 and only
/// for U1; U1(angle) = diag(1, e^{i angle}).
GateMatrix standard_gate(GateName name, std::optional<double> angle = std::nullopt);

/// Rotation parameter of the n-th root of X, stored as the angle
/// lambda = pi / n in [0, pi]. lambda = 0 is the identity (n = infinity).
class RotationOrder {
 public:
  /// Throws DomainError unless 0 <= lambda <= pi.
  static RotationOrder from_lambda(double lambda);

  /// Throws DomainError unless n >= 1.
  static RotationOrder from_root(double n);

  double lambda() const { return lambda_; }

  /// pi / lambda, or +infinity when lambda == 0.
  double n_equivalent() const;

  friend bool operator==(const RotationOrder&, const RotationOrder&) = default;

 private:
  explicit RotationOrder(double lambda) : lambda_(lambda) {}
  double lambda_;
};

/// One primitive in a decomposition. `roles` are positions in a local
/// register: in two-qubit sequences role 0 is the control, role 1 the target.
struct GateStep {
  GateName gate;
  double angle = 0.0;  // used by U1 only
  std::vector<int> roles;

  friend bool operator==(const GateStep&, const GateStep&) = default;
};

using GateSequence = std::vector<GateStep>;

/// (1/2) [[1 + e^{i lambda}, 1 - e^{i lambda}], [1 - e^{i lambda}, 1 + e^{i lambda}]].
GateMatrix nth_root_x(RotationOrder order);

/// [H, U1(lambda), H]: the root of Z enclosed by Hadamards.
GateSequence nth_root_x_sequence(RotationOrder order);

/// Order whose root-of-X gate maps |0> to a state with P(|0>) = p0, i.e.
/// lambda = acos(2 p0 - 1). Throws DomainError unless 0 <= p0 <= 1.
RotationOrder solve_rotation_order(double p0);

/// Identity on the control-0 block, nth_root_x on the control-1 block.
GateMatrix controlled_nth_root_x(RotationOrder order);

/// Controlled-phase core (half-angle phases around two CNOTs) enclosed by
/// Hadamards on the target. Seven primitives; composes exactly, with no
/// global phase, to controlled_nth_root_x.
GateSequence controlled_nth_root_x_sequence(RotationOrder order);

/// controlled_nth_root_x_sequence conjugated by X on the control, so the
/// rotation fires when the control is |0>.
GateSequence anti_controlled_sequence(RotationOrder order);

/// Product of the embedded primitives in application order (the first step
/// is the rightmost factor). num_qubits must be 1 or 2.
GateMatrix compose_sequence(const GateSequence& seq, int num_qubits);

/// Textual listing, one primitive per line (`H q0`, `U1 <radians> q0`,
/// `CNOT q0 q1`, `X q0`); role r is printed as q<qubits[r]>. Angles use 17
/// significant digits.
std::string format_sequence(const GateSequence& seq, const std::vector<int>& qubits);

std::string gate_mnemonic(GateName name);

}  // namespace qmarkov
