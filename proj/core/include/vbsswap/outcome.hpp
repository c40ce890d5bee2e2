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
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vbsswap/tensor.hpp"

namespace vbsswap {

/// Thrown when an exhaustive enumeration would exceed its outcome budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One sequence of Bell-measurement results along a chain.
///
/// `indices[k]` is the result at internal node k+1. Qubit chains use the
/// Pauli label (1..3 in vbs mode, 0..3 in plain mode); qudit chains use the
/// digit m + D*n of U_mn.
struct OutcomeRecord {
  std::vector<int> indices;
  double weight = 0.0;  // unnormalized weight of this outcome
  double prob = 0.0;    // weight / p_sum
  ComplexMatrix final_op;
  double concurrence = 0.0;  // 0 when weight is 0

  double prob_times_c() const { return prob * concurrence; }
};

struct TradeoffReport {
  std::size_t dim = 2;
  std::size_t outcomes_per_node = 0;
  std::vector<double> bond_concurrences;
  double concurrence_product = 0.0;
  double p_sum = 0.0;
  double constant = 0.0;  // concurrence_product / p_sum
  double max_residual = 0.0;
  std::vector<OutcomeRecord> records;
};

/// Integer code of an outcome, little-endian: sum_k indices[k] * base^k.
std::uint64_t encode_outcome(std::span<const int> indices, std::size_t base);
std::vector<int> decode_outcome(std::uint64_t code, std::size_t length, std::size_t base);

/// Comma-free rendering, one symbol per node in node order (node 1 first).
/// Symbols are 0-9, a-z, A-Z, '+', '/', enough for 64 outcomes per node.
std::string format_outcome(std::span<const int> indices);

/// base^length, or throws BudgetExceeded if it is larger than `budget`.
std::uint64_t checked_outcome_count(std::size_t base, std::size_t length, std::uint64_t budget);

}  // namespace vbsswap
