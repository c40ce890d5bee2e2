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

#include <cstddef>
#include <span>
#include <vector>

#include "vbsswap/tensor.hpp"

namespace vbsswap {

/// Diagonal local filtering operator T = diag(lambda_0, ..., lambda_{D-1}).
///
/// Entries are always stored bond-normalized, sum_j |lambda_j|^2 = D, so the
/// filtered bond (I (x) T)|Phi+> has unit norm regardless of the prefactor the
/// caller used. scale() is the factor that was applied to the caller's input.
/// For qubits alpha() and beta() are the bond amplitudes with
/// |alpha|^2 + |beta|^2 = 1, i.e. T = sqrt(2) diag(alpha, beta).
class FilterOp {
 public:
  FilterOp() = default;

  std::size_t dim() const { return diag_.size(); }
  std::span<const Complex> diag() const { return diag_; }
  double scale() const { return scale_; }
  ComplexMatrix matrix() const { return ComplexMatrix::diagonal(diag_); }

  Complex alpha() const;
  Complex beta() const;

  bool is_maximal(double tol = kComposedTol) const;
  bool is_singular() const;

  friend bool operator==(const FilterOp&, const FilterOp&) = default;

 private:
  friend FilterOp make_filter(std::span<const Complex> diag);
  std::vector<Complex> diag_;
  double scale_ = 1.0;
};

/// Rescales `diag` to bond normalization. Needs >= 2 finite entries, not all zero.
FilterOp make_filter(std::span<const Complex> diag);
FilterOp make_filter(std::initializer_list<Complex> diag);

/// Accepts only diagonal matrices. Callers holding T' = U T V must strip the
/// unitaries first; they do not change the bond's entanglement.
FilterOp filter_from_matrix(const ComplexMatrix& m, double tol = kExactTol);

enum class BondConvention {
  kPlain,  // (I (x) T)|Phi+>
  kVbs,    // (I (x) sigma3 T)|Phi+> = alpha|01> - beta|10>
};

struct Bond {
  Bond(FilterOp f, BondConvention c);

  FilterOp filter;
  BondConvention convention;
};

StateVector bond_state(const Bond& bond);

/// D |det T|^(2/D) / Tr(T T^dagger); 2|alpha beta| for qubits. The convention
/// does not matter, sigma3 has unit determinant modulus.
double bond_concurrence(const FilterOp& filter);
inline double bond_concurrence(const Bond& bond) { return bond_concurrence(bond.filter); }

}  // namespace vbsswap
