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
#include <span>
#include <vector>

#include "qmarkov/gate_matrix.h"

namespace qmarkov {

/// Default register capacity: 2^24 amplitudes of 16 bytes is 256 MiB.
inline constexpr int kDefaultMaxQubits = 24;

/// Hard ceiling on any configured capacity (indices are 64-bit).
inline constexpr int kAbsoluteMaxQubits = 40;

/// Dense statevector of an n-qubit register.
///
/// Qubit q corresponds to bit q of the amplitude index, so q0 is the least
/// significant bit. Gate kernels touch disjoint amplitude pairs (or quads)
/// and perform no reductions, so results are bit-identical for any thread
/// count.
class Statevector {
 public:
  /// |0...0> on num_qubits qubits. Throws CapacityError unless
  /// 1 <= num_qubits <= max_qubits.
  explicit Statevector(int num_qubits, int max_qubits = kDefaultMaxQubits);

  /// Adopts explicit amplitudes; length must be a power of two >= 2 and the
  /// norm must be 1 within 1e-10.
  static Statevector from_amplitudes(std::vector<Complex> amplitudes,
                                     int max_qubits = kDefaultMaxQubits);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t index) const { return amplitudes_[index]; }

  /// Worker threads used by the gate kernels; 0 means hardware concurrency.
  void set_threads(unsigned threads) { threads_ = threads; }
  unsigned threads() const { return threads_; }

  /// Applies a 2x2 unitary to `target`.
  void apply_single(const GateMatrix& gate, int target);

  /// Applies a 4x4 unitary over (control, target) using |control target>
  /// basis order.
  void apply_two(const GateMatrix& gate, int control, int target);

  /// Pauli-X on `target` (amplitude swap; no arithmetic).
  void apply_x(int target);

  /// CNOT as an amplitude permutation.
  void apply_cnot(int control, int target);

  /// diag(1, phase) on `target`; |phase| must be 1 within 1e-10.
  void apply_phase(Complex phase, int target);

  double norm() const;

 private:
  Statevector() = default;

  void check_qubit(int q) const;

  int num_qubits_ = 0;
  unsigned threads_ = 1;
  std::vector<Complex> amplitudes_;
};

/// Basis state |0...0>.
inline Statevector init_statevector(int num_qubits, int max_qubits = kDefaultMaxQubits) {
  return Statevector(num_qubits, max_qubits);
}

}  // namespace qmarkov
