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
#include <map>
#include <random>
#include <span>
#include <vector>

#include "vbsswap/filter.hpp"
#include "vbsswap/outcome.hpp"
#include "vbsswap/tensor.hpp"

namespace vbsswap {

/// Measurement basis used at every internal node of a qubit chain.
enum class BasisMode {
  kPlain,  // complete Bell basis (I (x) sigma_i)|Phi+>, i = 0..3
  kVbs,    // triplet basis (sigma3 (x) sigma_i)|Phi+>, i = 1..3; singlet projected out
};

/// sigma_0 = I, sigma_1 = sigma_x, sigma_2 = sigma_z, sigma_3 = sigma_x sigma_z.
ComplexMatrix pauli(int i);

std::span<const int> basis_labels(BasisMode mode);

StateVector bell_state(BasisMode mode, int i);

/// Bonds T_0 .. T_N joined by Bell measurements at N internal nodes.
class SwapChain {
 public:
  SwapChain(std::vector<FilterOp> filters, BasisMode mode);

  const std::vector<FilterOp>& filters() const { return filters_; }
  BasisMode mode() const { return mode_; }
  std::size_t nodes() const { return filters_.size() - 1; }

 private:
  std::vector<FilterOp> filters_;
  BasisMode mode_;
};

SwapChain identical_chain(const FilterOp& filter, std::size_t n_bonds, BasisMode mode);

/// vbs: sigma3 T_N sigma_{i_N} ... sigma_{i_1} T_0; plain: the same without sigma3.
ComplexMatrix chain_operator(const SwapChain& chain, std::span<const int> indices);

/// Unnormalized outcome weight (1/2) Tr(M M^dagger); its sum over outcomes is
/// P_sum. A complete plain basis gives P_sum = 4^N, since each swap succeeds
/// with amplitude 1/2 per outcome.
double outcome_weight(const SwapChain& chain, std::span<const int> indices);

/// Enumeration is refused past this many outcomes.
inline constexpr std::uint64_t kQubitEnumerationBudget = 43046721;  // 3^16

/// Full outcome table with the trade-off constant prod_j C_j / P_sum.
TradeoffReport enumerate_outcomes(const SwapChain& chain,
                                  std::uint64_t budget = kQubitEnumerationBudget);

/// P_sum through the transfer map in O(N). May overflow for very long vbs
/// chains; log_p_sum_transfer does not.
double p_sum_transfer(const SwapChain& chain);
double log_p_sum_transfer(const SwapChain& chain);

/// log P_sum for the identical-filter chains with 1..max_bonds bonds, in one pass.
/// Entry k is the chain with k+1 bonds.
std::vector<double> log_p_sum_profile(const FilterOp& filter, BasisMode mode, std::size_t max_bonds);

double tradeoff_constant(const SwapChain& chain);
double log_tradeoff_constant(const SwapChain& chain);

/// Empirical counts keyed by outcome indices.
using FrequencyTable = std::map<std::vector<int>, std::uint64_t>;

/// Draws measurement sequences node by node. Conditionals at node k use the
/// suffix operator E_k = sum over later outcomes of the adjoint transfer map,
/// so each draw follows the exact joint distribution.
class OutcomeSampler {
 public:
  OutcomeSampler(SwapChain chain, std::uint64_t seed);

  std::vector<int> draw();
  FrequencyTable sample(std::uint64_t n_samples);

 private:
  double uniform();

  SwapChain chain_;
  std::vector<ComplexMatrix> ops_;
  std::vector<ComplexMatrix> ops_adj_;
  std::vector<ComplexMatrix> suffix_;  // suffix_[k] for k = 1..N, index 0 unused
  std::mt19937_64 rng_;
};

FrequencyTable sample_outcomes(const SwapChain& chain, std::uint64_t n_samples, std::uint64_t seed);

}  // namespace vbsswap
