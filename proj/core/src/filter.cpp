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

#include "vbsswap/filter.hpp"

#include <cmath>
#include <stdexcept>

namespace vbsswap {

FilterOp make_filter(std::span<const Complex> diag) {
  if (diag.size() < 2) throw std::invalid_argument("filter needs at least two diagonal entries");
  double sum_sq = 0.0;
  for (const Complex& z : diag) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("filter entries must be finite");
    }
    sum_sq += std::norm(z);
  }
  if (sum_sq == 0.0) throw std::invalid_argument("all-zero filter has no valid bond state");

  FilterOp f;
  f.scale_ = std::sqrt(static_cast<double>(diag.size()) / sum_sq);
  f.diag_.reserve(diag.size());
  for (const Complex& z : diag) f.diag_.push_back(z * f.scale_);
  return f;
}

FilterOp make_filter(std::initializer_list<Complex> diag) {
  return make_filter(std::span<const Complex>(diag.begin(), diag.size()));
}

FilterOp filter_from_matrix(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) throw std::invalid_argument("filter matrix must be square");
  std::vector<Complex> diag(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (r != c && std::abs(m(r, c)) > tol) {
        throw std::invalid_argument("filter has off-diagonal entries; diagonalize it first");
      }
    }
    diag[r] = m(r, r);
  }
  return make_filter(diag);
}

Complex FilterOp::alpha() const {
  if (dim() != 2) throw std::logic_error("alpha() is defined for qubit filters only");
  return diag_[0] / std::sqrt(2.0);
}

Complex FilterOp::beta() const {
  if (dim() != 2) throw std::logic_error("beta() is defined for qubit filters only");
  return diag_[1] / std::sqrt(2.0);
}

bool FilterOp::is_maximal(double tol) const {
  for (const Complex& z : diag_) {
    if (std::abs(std::abs(z) - 1.0) > tol) return false;
  }
  return true;
}

bool FilterOp::is_singular() const {
  for (const Complex& z : diag_) {
    if (z == Complex{}) return true;
  }
  return false;
}

Bond::Bond(FilterOp f, BondConvention c) : filter(std::move(f)), convention(c) {
  if (convention == BondConvention::kVbs && filter.dim() != 2) {
    throw std::invalid_argument("vbs bond convention requires qubit filters");
  }
}

StateVector bond_state(const Bond& bond) {
  const ComplexMatrix t = bond.filter.matrix();
  if (bond.convention == BondConvention::kPlain) {
    return state_from_operator(t, bond.filter.dim());
  }
  const ComplexMatrix sigma3{{0.0, -1.0}, {1.0, 0.0}};
  return state_from_operator(sigma3 * t, 2);
}

double bond_concurrence(const FilterOp& filter) {
  const auto d = static_cast<double>(filter.dim());
  double abs_det = 1.0;
  double trace = 0.0;
  for (const Complex& z : filter.diag()) {
    abs_det *= std::abs(z);
    trace += std::norm(z);
  }
  if (filter.dim() == 2) return 2.0 * abs_det / trace;
  return d * std::pow(abs_det, 2.0 / d) / trace;
}

}  // namespace vbsswap
