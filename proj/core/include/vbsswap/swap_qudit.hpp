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

#include <cstdint>
#include <span>
#include <vector>

#include "vbsswap/filter.hpp"
#include "vbsswap/outcome.hpp"
#include "vbsswap/tensor.hpp"

namespace vbsswap {

/// omega^k with omega = exp(2 pi i / D). Quarter turns are exact.
Complex root_of_unity(std::size_t dim, std::size_t k);

/// Clock (Z) and shift (X) operators and their products.
struct WeylOp {
  std::size_t dim = 0;
  std::size_t m = 0;  // shift power
  std::size_t n = 0;  // clock power
  Complex omega;
  ComplexMatrix matrix;  // X^m Z^n
};

ComplexMatrix shift_matrix(std::size_t dim);
ComplexMatrix clock_matrix(std::size_t dim);

WeylOp gen_pauli(std::size_t dim, std::size_t m, std::size_t n);

/// (I (x) U_mn)|Phi+>.
StateVector qudit_bell(std::size_t dim, std::size_t m, std::size_t n);

/// Measured Bell index at one node. The label recorded for an outcome is the
/// operator U_mn appearing in the chain product; the projector that produced
/// it is |Phi_{m,-n}>.
struct WeylIndex {
  std::size_t m = 0;
  std::size_t n = 0;

  int digit(std::size_t dim) const { return static_cast<int>(m + dim * n); }
  static WeylIndex from_digit(int digit, std::size_t dim);
};

class QuditChain {
 public:
  QuditChain(std::size_t dim, std::vector<FilterOp> filters);

  std::size_t dim() const { return dim_; }
  const std::vector<FilterOp>& filters() const { return filters_; }
  std::size_t nodes() const { return filters_.size() - 1; }

 private:
  std::size_t dim_;
  std::vector<FilterOp> filters_;
};

/// T_N U_{m_N n_N} ... U_{m_1 n_1} T_0.
ComplexMatrix qudit_chain_operator(const QuditChain& chain, std::span<const WeylIndex> outcome);

/// D (det rho)^(1/D) for rho = M M^dagger / Tr(M M^dagger). Throws on M = 0.
double gen_concurrence(const ComplexMatrix& m, std::size_t dim);

inline constexpr std::uint64_t kQuditEnumerationBudget = 10'000'000;

/// D^(2N) outcomes with weight (1/D) Tr(M M^dagger), so weight * C^e equals
/// the product of bond concurrences. The basis is complete, so p_sum is D^(2N)
/// and prob = weight / D^(2N).
TradeoffReport enumerate_qudit_outcomes(const QuditChain& chain,
                                        std::uint64_t budget = kQuditEnumerationBudget);

}  // namespace vbsswap
