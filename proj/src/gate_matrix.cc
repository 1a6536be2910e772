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

#include "qmarkov/gate_matrix.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <fmt/core.h>

#include "qmarkov/errors.h"

namespace qmarkov {

GateMatrix::GateMatrix(std::size_t dim) : dim_(dim) {
  if (dim != 2 && dim != 4) {
    throw ValidationError("gate matrix dimension must be 2 or 4, got " + std::to_string(dim));
  }
}

GateMatrix::GateMatrix(std::initializer_list<Complex> entries)
    : GateMatrix(entries.size() == 4 ? 2 : entries.size() == 16 ? 4 : 0) {
  std::copy(entries.begin(), entries.end(), entries_.begin());
}

GateMatrix GateMatrix::identity(std::size_t dim) {
  GateMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

GateMatrix GateMatrix::zero(std::size_t dim) { return GateMatrix(dim); }

GateMatrix GateMatrix::operator*(const GateMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw ValidationError("gate matrix dimension mismatch");
  GateMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < dim_; ++k) acc += (*this)(r, k) * rhs(k, c);
      out(r, c) = acc;
    }
  }
  return out;
}

GateMatrix GateMatrix::adjoint() const {
  GateMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

double GateMatrix::unitarity_error() const {
  return max_abs_diff(adjoint() * *this, identity(dim_));
}

std::string GateMatrix::to_string(int precision) const {
  std::ostringstream os;
  for (std::size_t r = 0; r < dim_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < dim_; ++c) {
      const Complex z = (*this)(r, c);
      // Print -0 as 0 so listings stay stable.
      const double re = z.real() == 0.0 ? 0.0 : z.real();
      const double im = z.imag() == 0.0 ? 0.0 : z.imag();
      os << fmt::format("{:+.{}f}{:+.{}f}i", re, precision, im, precision);
      if (c + 1 < dim_) os << ", ";
    }
    os << "]\n";
  }
  return os.str();
}

double max_abs_diff(const GateMatrix& a, const GateMatrix& b) {
  if (a.dim() != b.dim()) throw ValidationError("gate matrix dimension mismatch");
  double worst = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  }
  return worst;
}

double max_abs_diff_up_to_phase(const GateMatrix& a, const GateMatrix& b) {
  if (a.dim() != b.dim()) throw ValidationError("gate matrix dimension mismatch");
  // Phase of tr(b^dagger a) is the least-squares optimal alignment.
  Complex overlap = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) overlap += std::conj(b(r, c)) * a(r, c);
  }
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  GateMatrix aligned = b;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) aligned(r, c) *= phase;
  }
  return max_abs_diff(a, aligned);
}

}  // namespace qmarkov
