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

// Shared machinery for qubit and qudit chains. Both front ends route through
// these functions so that a D = 2 qudit chain and a plain qubit chain perform
// the same floating-point operations in the same order.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vbsswap/filter.hpp"
#include "vbsswap/outcome.hpp"
#include "vbsswap/tensor.hpp"

namespace vbsswap::detail {

struct ChainSpec {
  std::size_t dim = 2;
  std::vector<ComplexMatrix> filters;     // T_0 .. T_N
  std::vector<ComplexMatrix> node_ops;    // operator applied for each node label
  std::vector<int> labels;                // recorded label of node_ops[i]
  std::optional<ComplexMatrix> leading;   // applied after T_N (sigma3 in vbs mode)
  std::vector<double> bond_concurrences;

  std::size_t nodes() const { return filters.empty() ? 0 : filters.size() - 1; }
};

// T_N op_{N} ... op_{1} T_0, with an optional leading operator.
ComplexMatrix ordered_product(const ChainSpec& spec, std::span<const std::size_t> op_positions);

// (1/D) Tr(M M^dagger).
double outcome_weight(const ChainSpec& spec, const ComplexMatrix& m);

// D |det M|^(2/D) / Tr(M M^dagger); 0 for M = 0.
double det_concurrence(const ComplexMatrix& m, std::size_t dim);

TradeoffReport enumerate(const ChainSpec& spec, std::uint64_t budget);

// Iterates rho -> sum_i T op_i rho op_i^dagger T^dagger from rho = T_0 T_0^dagger.
// Returns log of the outcome-weight sum; rho is rescaled each step.
double log_p_sum(const ChainSpec& spec);

double product(std::span<const double> xs);

}  // namespace vbsswap::detail
