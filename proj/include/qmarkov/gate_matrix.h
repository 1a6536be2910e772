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

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>

namespace qmarkov {

using Complex = std::complex<double>;

/// Tolerance used when a gate is checked for unitarity before application.
inline constexpr double kUnitarityTolerance = 1e-10;

/// Dense 2x2 or 4x4 complex matrix acting on one or two qubits.
///
/// Entries are stored row-major. For 4x4 matrices the basis order is
/// |control target> in {00, 01, 10, 11}: the control is the more
/// significant bit of the pair.
class GateMatrix {
 public:
  /// 2x2 identity.
  GateMatrix() : GateMatrix(identity(2)) {}

  /// Row-major entries; size must be 4 or 16.
  GateMatrix(std::initializer_list<Complex> entries);

  static GateMatrix identity(std::size_t dim);
  static GateMatrix zero(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t num_qubits() const { return dim_ == 2 ? 1 : 2; }

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  GateMatrix operator*(const GateMatrix& rhs) const;
  GateMatrix adjoint() const;

  /// max |(U^dagger U - I)_{ij}|.
  double unitarity_error() const;
  bool is_unitary(double tol = kUnitarityTolerance) const { return unitarity_error() <= tol; }

  std::string to_string(int precision = 6) const;

 private:
  explicit GateMatrix(std::size_t dim);

  std::size_t dim_;
  std::array<Complex, 16> entries_{};
};

/// Largest entrywise modulus of a - b. Dimensions must agree.
double max_abs_diff(const GateMatrix& a, const GateMatrix& b);

/// Like max_abs_diff but first removes the global phase that best aligns b
/// with a. Intended for diagnostics; exact identities use max_abs_diff.
double max_abs_diff_up_to_phase(const GateMatrix& a, const GateMatrix& b);

}  // namespace qmarkov
