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

#include "vbsswap/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace vbsswap {
namespace {

void require_finite(std::span<const Complex> entries) {
  for (const Complex& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("non-finite amplitude");
    }
  }
}

std::size_t product_of(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw std::invalid_argument("matrix entry count " + std::to_string(entries_.size()) +
                                " does not match " + std::to_string(rows) + "x" +
                                std::to_string(cols));
  }
  require_finite(entries_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  require_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  require_finite(diag);
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out = *this;
  for (Complex& z : out.entries_) z = std::conj(z);
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm_sq() const {
  double s = 0.0;
  for (const Complex& z : entries_) s += std::norm(z);
  return s;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& z : entries_) z *= s;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch in +");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch in -");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("shape mismatch in product: " + std::to_string(a.rows_) + "x" +
                                std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                std::to_string(b.cols_));
  }
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex lhs = a(r, k);
      if (lhs == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += lhs * b(k, c);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

StateVector::StateVector(std::vector<std::size_t> dims, std::vector<Complex> amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
  if (dims_.empty()) throw std::invalid_argument("state needs at least one subsystem");
  for (std::size_t d : dims_) {
    if (d == 0) throw std::invalid_argument("zero-dimensional subsystem");
  }
  if (amplitudes_.size() != product_of(dims_)) {
    throw std::invalid_argument("amplitude count does not match subsystem dimensions");
  }
  require_finite(amplitudes_);
}

StateVector StateVector::basis(std::vector<std::size_t> dims, std::span<const std::size_t> digits) {
  if (digits.size() != dims.size()) throw std::invalid_argument("basis digit count mismatch");
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (digits[k] >= dims[k]) throw std::invalid_argument("basis digit out of range");
    index = index * dims[k] + digits[k];
  }
  std::vector<Complex> amps(product_of(dims));
  amps[index] = 1.0;
  return {std::move(dims), std::move(amps)};
}

StateVector StateVector::product(const StateVector& a, const StateVector& b) {
  std::vector<std::size_t> dims = a.dims_;
  dims.insert(dims.end(), b.dims_.begin(), b.dims_.end());
  std::vector<Complex> amps(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) amps[i * b.size() + j] = a[i] * b[j];
  return {std::move(dims), std::move(amps)};
}

double StateVector::norm_sq() const {
  double s = 0.0;
  for (const Complex& z : amplitudes_) s += std::norm(z);
  return s;
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm_sq() - 1.0) <= tol; }

StateVector StateVector::normalized() const {
  const double n = std::sqrt(norm_sq());
  if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
  return scaled(1.0 / n);
}

StateVector StateVector::scaled(Complex s) const {
  StateVector out = *this;
  for (Complex& z : out.amplitudes_) z *= s;
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex s = a(ar, ac);
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
    }
  return out;
}

StateVector kron(const StateVector& a, const StateVector& b) {
  std::vector<std::size_t> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  std::vector<Complex> amps(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) amps[i * b.size() + j] = a[i] * b[j];
  return {std::move(dims), std::move(amps)};
}

ComplexMatrix partial_trace(const StateVector& state, std::span<const std::size_t> keep) {
  const auto& dims = state.dims();
  if (keep.empty()) throw std::invalid_argument("partial_trace: nothing to keep");
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size()) {
      throw std::out_of_range("partial_trace: subsystem " + std::to_string(k) + " out of range");
    }
    if (kept[k]) throw std::invalid_argument("partial_trace: duplicate subsystem");
    kept[k] = true;
  }
  if (!state.is_normalized()) throw std::invalid_argument("partial_trace: state not normalized");

  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
  for (std::size_t k = 0; k < dims.size(); ++k) (kept[k] ? kept_dim : traced_dim) *= dims[k];

  // Reshape into a kept_dim x traced_dim amplitude matrix A; rho = A A^dagger.
  ComplexMatrix a(kept_dim, traced_dim);
  std::vector<std::size_t> digit(dims.size(), 0);
  for (std::size_t flat = 0; flat < state.size(); ++flat) {
    std::size_t rem = flat;
    for (std::size_t k = dims.size(); k-- > 0;) {
      digit[k] = rem % dims[k];
      rem /= dims[k];
    }
    std::size_t row = 0;
    std::size_t col = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (kept[k]) {
        row = row * dims[k] + digit[k];
      } else {
        col = col * dims[k] + digit[k];
      }
    }
    a(row, col) = state[flat];
  }
  return a * a.adjoint();
}

StateVector state_from_operator(const ComplexMatrix& m, std::size_t dim) {
  if (m.rows() != dim || m.cols() != dim) throw std::invalid_argument("state_from_operator: M must be D x D");
  const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<Complex> amps(dim * dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k) amps[j * dim + k] = m(k, j) * inv_sqrt;
  return {{dim, dim}, std::move(amps)};
}

Complex determinant(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1.0;
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);

  ComplexMatrix lu = m;
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    }
    if (lu(pivot, col) == Complex{}) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(pivot, c), lu(col, c));
      det = -det;
    }
    det *= lu(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = lu(r, col) / lu(col, col);
      for (std::size_t c = col; c < n; ++c) lu(r, c) -= f * lu(col, c);
    }
  }
  return det;
}

Complex inner_product(const StateVector& u, const StateVector& v) {
  if (u.dims() != v.dims()) throw std::invalid_argument("inner_product: dimension mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double fidelity_up_to_phase(const StateVector& u, const StateVector& v, double tol) {
  if (u.dims() != v.dims()) throw std::invalid_argument("fidelity: dimension mismatch");
  if (!u.is_normalized(tol) || !v.is_normalized(tol)) {
    throw std::invalid_argument("fidelity: states must be normalized");
  }
  return std::min(1.0, std::norm(inner_product(u, v)));
}

}  // namespace vbsswap
