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

#include "qmarkov/gates.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <fmt/core.h>

#include "qmarkov/errors.h"

namespace qmarkov {
namespace {

constexpr double kPi = std::numbers::pi;

Complex phase(double angle) { return std::polar(1.0, angle); }

// Matrix of one step embedded in a register of `num_qubits` (1 or 2) qubits.
// Two-qubit basis index is 2 * bit(role 0) + bit(role 1).
GateMatrix embed(const GateStep& step, int num_qubits) {
  const std::optional<double> angle =
      step.gate == GateName::kU1 ? std::optional<double>(step.angle) : std::nullopt;
  const GateMatrix local = standard_gate(step.gate, angle);
  const int arity = step.gate == GateName::kCNOT ? 2 : 1;
  if (static_cast<int>(step.roles.size()) != arity) {
    throw ValidationError(gate_mnemonic(step.gate) + " expects " + std::to_string(arity) +
                          " qubit role(s)");
  }
  for (int r : step.roles) {
    if (r < 0 || r >= num_qubits) {
      throw IndexError("role " + std::to_string(r) + " out of range for " +
                       std::to_string(num_qubits) + "-qubit sequence");
    }
  }
  if (num_qubits == 1) return local;

  GateMatrix out = GateMatrix::zero(4);
  if (arity == 1) {
    // U on role 0 is U (x) I; on role 1 it is I (x) U.
    const int role = step.roles[0];
    for (std::size_t row = 0; row < 4; ++row) {
      for (std::size_t col = 0; col < 4; ++col) {
        const std::size_t r_hi = row >> 1, r_lo = row & 1, c_hi = col >> 1, c_lo = col & 1;
        if (role == 0) {
          if (r_lo == c_lo) out(row, col) = local(r_hi, c_hi);
        } else {
          if (r_hi == c_hi) out(row, col) = local(r_lo, c_lo);
        }
      }
    }
    return out;
  }
  if (step.roles[0] == step.roles[1]) throw ValidationError("CNOT control and target must differ");
  if (step.roles[0] == 0) return local;
  // Control on role 1: permute the basis by swapping the two bits.
  const auto swap_bits = [](std::size_t i) { return ((i & 1) << 1) | (i >> 1); };
  for (std::size_t row = 0; row < 4; ++row) {
    for (std::size_t col = 0; col < 4; ++col) out(row, col) = local(swap_bits(row), swap_bits(col));
  }
  return out;
}

}  // namespace

GateMatrix standard_gate(GateName name, std::optional<double> angle) {
  if ((name == GateName::kU1) != angle.has_value()) {
    throw ValidationError(name == GateName::kU1 ? "U1 requires an angle"
                                                : gate_mnemonic(name) + " takes no angle");
  }
  const double s = 1.0 / std::sqrt(2.0);
  switch (name) {
    case GateName::kH:
      return GateMatrix{s, s, s, -s};
    case GateName::kX:
      return GateMatrix{0.0, 1.0, 1.0, 0.0};
    case GateName::kU1:
      return GateMatrix{1.0, 0.0, 0.0, phase(*angle)};
    case GateName::kCNOT:
      return GateMatrix{1.0, 0.0, 0.0, 0.0,  //
                        0.0, 1.0, 0.0, 0.0,  //
                        0.0, 0.0, 0.0, 1.0,  //
                        0.0, 0.0, 1.0, 0.0};
  }
  throw ValidationError("unknown gate");
}

std::string gate_mnemonic(GateName name) {
  switch (name) {
    case GateName::kH:
      return "H";
    case GateName::kX:
      return "X";
    case GateName::kU1:
      return "U1";
    case GateName::kCNOT:
      return "CNOT";
  }
  return "?";
}

RotationOrder RotationOrder::from_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= kPi)) {
    throw DomainError(fmt::format("rotation angle {} outside [0, pi]", lambda));
  }
  return RotationOrder(lambda);
}

RotationOrder RotationOrder::from_root(double n) {
  if (!(n >= 1.0)) throw DomainError(fmt::format("root order {} must be >= 1", n));
  return RotationOrder(std::isinf(n) ? 0.0 : kPi / n);
}

double RotationOrder::n_equivalent() const {
  return lambda_ == 0.0 ? std::numeric_limits<double>::infinity() : kPi / lambda_;
}

GateMatrix nth_root_x(RotationOrder order) {
  const Complex e = phase(order.lambda());
  const Complex plus = (1.0 + e) / 2.0;
  const Complex minus = (1.0 - e) / 2.0;
  return GateMatrix{plus, minus, minus, plus};
}

GateSequence nth_root_x_sequence(RotationOrder order) {
  return {
      {GateName::kH, 0.0, {0}},
      {GateName::kU1, order.lambda(), {0}},
      {GateName::kH, 0.0, {0}},
  };
}

RotationOrder solve_rotation_order(double p0) {
  if (!(p0 >= 0.0 && p0 <= 1.0)) {
    throw DomainError(fmt::format("probability {} outside [0, 1]", p0));
  }
  const double c = std::clamp(2.0 * p0 - 1.0, -1.0, 1.0);
  return RotationOrder::from_lambda(std::acos(c));
}

GateMatrix controlled_nth_root_x(RotationOrder order) {
  const GateMatrix block = nth_root_x(order);
  GateMatrix out = GateMatrix::identity(4);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) out(2 + r, 2 + c) = block(r, c);
  }
  return out;
}

GateSequence controlled_nth_root_x_sequence(RotationOrder order) {
  const double half = order.lambda() / 2.0;
  return {
      {GateName::kH, 0.0, {1}},
      {GateName::kU1, half, {0}},
      {GateName::kCNOT, 0.0, {0, 1}},
      {GateName::kU1, -half, {1}},
      {GateName::kCNOT, 0.0, {0, 1}},
      {GateName::kU1, half, {1}},
      {GateName::kH, 0.0, {1}},
  };
}

GateSequence anti_controlled_sequence(RotationOrder order) {
  GateSequence seq;
  seq.push_back({GateName::kX, 0.0, {0}});
  for (GateStep& step : controlled_nth_root_x_sequence(order)) seq.push_back(std::move(step));
  seq.push_back({GateName::kX, 0.0, {0}});
  return seq;
}

GateMatrix compose_sequence(const GateSequence& seq, int num_qubits) {
  if (num_qubits != 1 && num_qubits != 2) {
    throw ValidationError("compose_sequence supports 1 or 2 qubits");
  }
  GateMatrix total = GateMatrix::identity(num_qubits == 1 ? 2 : 4);
  for (const GateStep& step : seq) total = embed(step, num_qubits) * total;
  return total;
}

std::string format_sequence(const GateSequence& seq, const std::vector<int>& qubits) {
  std::ostringstream os;
  for (const GateStep& step : seq) {
    os << gate_mnemonic(step.gate);
    if (step.gate == GateName::kU1) os << fmt::format(" {:.17g}", step.angle);
    for (int r : step.roles) {
      if (r < 0 || r >= static_cast<int>(qubits.size())) {
        throw IndexError("role " + std::to_string(r) + " has no qubit assignment");
      }
      os << " q" << qubits[r];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace qmarkov
