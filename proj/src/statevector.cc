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

#include "qmarkov/statevector.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <thread>
#include <utility>

#include "qmarkov/errors.h"

namespace qmarkov {
namespace {

// Below this many independent groups the kernels run on the calling thread.
constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

// Runs body(begin, end) over [0, count), split into contiguous chunks.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads <= 1 || count < kParallelThreshold) {
    body(std::size_t{0}, count);
    return;
  }
  const std::size_t chunks = std::min<std::size_t>(threads, count);
  const std::size_t step = (count + chunks - 1) / chunks;
  std::vector<std::jthread> workers;
  workers.reserve(chunks - 1);
  for (std::size_t c = 1; c < chunks; ++c) {
    const std::size_t begin = c * step;
    const std::size_t end = std::min(count, begin + step);
    if (begin < end) workers.emplace_back([&body, begin, end] { body(begin, end); });
  }
  body(std::size_t{0}, std::min(count, step));
}

// Inserts a zero bit at position `bit` of k.
inline std::size_t insert_zero(std::size_t k, int bit) {
  const std::size_t low = k & ((std::size_t{1} << bit) - 1);
  return ((k >> bit) << (bit + 1)) | low;
}

void check_capacity(int num_qubits, int max_qubits) {
  const int limit = std::min(max_qubits, kAbsoluteMaxQubits);
  if (num_qubits < 1 || num_qubits > limit) {
    throw CapacityError("register of " + std::to_string(num_qubits) +
                        " qubits outside supported range [1, " + std::to_string(limit) + "]");
  }
}

}  // namespace

Statevector::Statevector(int num_qubits, int max_qubits) : num_qubits_(num_qubits) {
  check_capacity(num_qubits, max_qubits);
  amplitudes_.assign(std::size_t{1} << num_qubits, Complex(0.0, 0.0));
  amplitudes_[0] = Complex(1.0, 0.0);
}

Statevector Statevector::from_amplitudes(std::vector<Complex> amplitudes, int max_qubits) {
  const std::size_t n = amplitudes.size();
  if (n < 2 || !std::has_single_bit(n)) {
    throw ValidationError("amplitude count must be a power of two >= 2");
  }
  Statevector s;
  s.num_qubits_ = std::countr_zero(n);
  check_capacity(s.num_qubits_, max_qubits);
  s.amplitudes_ = std::move(amplitudes);
  if (std::abs(s.norm() - 1.0) > 1e-10) throw ValidationError("amplitudes are not normalized");
  return s;
}

void Statevector::check_qubit(int q) const {
  if (q < 0 || q >= num_qubits_) {
    throw IndexError("qubit index " + std::to_string(q) + " out of range for " +
                     std::to_string(num_qubits_) + "-qubit register");
  }
}

void Statevector::apply_single(const GateMatrix& gate, int target) {
  if (gate.dim() != 2) throw ValidationError("single-qubit gate must be 2x2");
  if (!gate.is_unitary()) throw ValidationError("gate is not unitary");
  check_qubit(target);

  const Complex m00 = gate(0, 0), m01 = gate(0, 1), m10 = gate(1, 0), m11 = gate(1, 1);
  const std::size_t stride = std::size_t{1} << target;
  Complex* amps = amplitudes_.data();
  parallel_for(amplitudes_.size() / 2, threads_, [=](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const std::size_t i0 = insert_zero(k, target);
      const std::size_t i1 = i0 | stride;
      const Complex a0 = amps[i0];
      const Complex a1 = amps[i1];
      amps[i0] = m00 * a0 + m01 * a1;
      amps[i1] = m10 * a0 + m11 * a1;
    }
  });
}

void Statevector::apply_two(const GateMatrix& gate, int control, int target) {
  if (gate.dim() != 4) throw ValidationError("two-qubit gate must be 4x4");
  if (!gate.is_unitary()) throw ValidationError("gate is not unitary");
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw ValidationError("control and target must differ");

  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  const int lo = std::min(control, target);
  const int hi = std::max(control, target);
  Complex m[4][4];
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) m[r][c] = gate(r, c);
  }
  Complex* amps = amplitudes_.data();
  parallel_for(amplitudes_.size() / 4, threads_, [=, &m](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const std::size_t base = insert_zero(insert_zero(k, lo), hi);
      const std::size_t idx[4] = {base, base | tbit, base | cbit, base | cbit | tbit};
      const Complex a[4] = {amps[idx[0]], amps[idx[1]], amps[idx[2]], amps[idx[3]]};
      for (int r = 0; r < 4; ++r) {
        amps[idx[r]] = m[r][0] * a[0] + m[r][1] * a[1] + m[r][2] * a[2] + m[r][3] * a[3];
      }
    }
  });
}

void Statevector::apply_x(int target) {
  check_qubit(target);
  const std::size_t stride = std::size_t{1} << target;
  Complex* amps = amplitudes_.data();
  parallel_for(amplitudes_.size() / 2, threads_, [=](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const std::size_t i0 = insert_zero(k, target);
      std::swap(amps[i0], amps[i0 | stride]);
    }
  });
}

void Statevector::apply_cnot(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw ValidationError("control and target must differ");
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  const int lo = std::min(control, target);
  const int hi = std::max(control, target);
  Complex* amps = amplitudes_.data();
  parallel_for(amplitudes_.size() / 4, threads_, [=](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const std::size_t base = insert_zero(insert_zero(k, lo), hi) | cbit;
      std::swap(amps[base], amps[base | tbit]);
    }
  });
}

void Statevector::apply_phase(Complex phase, int target) {
  if (std::abs(std::abs(phase) - 1.0) > kUnitarityTolerance) {
    throw ValidationError("phase factor must have unit modulus");
  }
  check_qubit(target);
  const std::size_t stride = std::size_t{1} << target;
  Complex* amps = amplitudes_.data();
  parallel_for(amplitudes_.size() / 2, threads_, [=](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      Complex& a = amps[insert_zero(k, target) | stride];
      a *= phase;
    }
  });
}

double Statevector::norm() const {
  double sum = 0.0;
  for (const Complex& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

}  // namespace qmarkov
