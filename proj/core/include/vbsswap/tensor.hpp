// Copyright 2026 The vbsswap Authors
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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace vbsswap {

using Complex = std::complex<double>;

// Default tolerances. Exact identities are checked at kExactTol, results of
// several chained products at kComposedTol.
inline constexpr double kExactTol = 1e-12;
inline constexpr double kComposedTol = 1e-10;

/// Dense complex matrix, row-major. Every stored entry is finite.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;
  // Tr(M M^dagger), accumulated entrywise.
  double frobenius_norm_sq() const;

  ComplexMatrix& operator*=(Complex s);
  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Pure state on a tensor product of subsystems. Subsystem 0 is the most
/// significant digit of the flat amplitude index.
class StateVector {
 public:
  StateVector() = default;
  StateVector(std::vector<std::size_t> dims, std::vector<Complex> amplitudes);

  static StateVector basis(std::vector<std::size_t> dims, std::span<const std::size_t> digits);
  static StateVector product(const StateVector& a, const StateVector& b);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::vector<Complex>& mutable_amplitudes() { return amplitudes_; }
  std::size_t size() const { return amplitudes_.size(); }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm_sq() const;
  bool is_normalized(double tol = kExactTol) const;
  // Throws if the norm is zero.
  StateVector normalized() const;
  StateVector scaled(Complex s) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<Complex> amplitudes_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
/// |a>|b>, with the subsystems of `a` first.
StateVector kron(const StateVector& a, const StateVector& b);

/// Reduced density matrix on the subsystems in `keep` (kept in ascending
/// order). The input must be normalized.
ComplexMatrix partial_trace(const StateVector& state, std::span<const std::size_t> keep);

/// (I (x) M)|Phi+> for a D x D operator M, left unnormalized:
/// amplitude of |j>|k> is M(k, j) / sqrt(D).
StateVector state_from_operator(const ComplexMatrix& m, std::size_t dim);

/// Closed form for 2x2, partially pivoted LU otherwise.
Complex determinant(const ComplexMatrix& m);

/// |<u|v>|^2 for normalized states with matching dims.
double fidelity_up_to_phase(const StateVector& u, const StateVector& v, double tol = kComposedTol);

Complex inner_product(const StateVector& u, const StateVector& v);

}  // namespace vbsswap
