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
#include <optional>
#include <span>
#include <vector>

#include "vbsswap/filter.hpp"
#include "vbsswap/tensor.hpp"

namespace vbsswap {

/// Brute-force state-vector model of a filtered VBS chain.
///
/// Every site is written as qubits via a^dagger|vac> = |0>, b^dagger|vac> = |1>.
/// The end sites carry one qubit each, the N internal sites two virtual qubits,
/// giving 2N + 2 qubits with qubit 0 most significant.
struct SiteLayout {
  std::size_t n_bonds = 0;

  std::size_t internal_sites() const { return n_bonds - 1; }
  std::size_t qubit_count() const { return 2 * n_bonds; }
  // First virtual qubit of internal site k (1-based); its partner is the next qubit.
  std::size_t pair_start(std::size_t site) const;
};

inline constexpr std::size_t kOracleMaxNodes = 8;

/// Projector onto span{|00>, (|01>+|10>)/sqrt2, |11>}.
ComplexMatrix symmetric_projector();

/// Product of the bonds alpha_j|01> - beta_j|10> with each internal site's
/// pair projected onto its symmetric subspace, normalized. With
/// `project_sites` false the raw bond product is returned.
StateVector build_vbs_state(std::span<const FilterOp> filters, bool project_sites = true);

/// Applies a two-qubit operator to the adjacent qubits (first, first + 1).
StateVector apply_pair_operator(const StateVector& state, const ComplexMatrix& op, std::size_t first);

struct MeasurementResult {
  double weight = 0.0;
  std::optional<StateVector> end_pair;  // absent when the projection vanishes
};

/// Projects internal site k onto (sigma3 (x) sigma_{i_k})|Phi+> for every k.
/// `weight` is the squared norm of what remains; `end_pair` the normalized
/// state of sites 0 and N+1.
MeasurementResult measure_internal_sites(const StateVector& state, std::span<const int> indices);

struct CrossCheckEntry {
  std::vector<int> indices;
  double oracle_weight = 0.0;
  double transfer_prob = 0.0;
  double weight_deviation = 0.0;
  double fidelity = 1.0;
  bool passed = true;
};

struct CrossCheckReport {
  std::vector<CrossCheckEntry> entries;
  double worst_weight_deviation = 0.0;
  double worst_fidelity = 1.0;
  bool passed = true;
};

struct CrossCheckOptions {
  double tolerance = 1e-9;
  // Negative control: the oracle measures with Bell labels 1 and 3 swapped.
  bool permute_bell_labels = false;
};

/// Compares oracle weights and end pairs with the transfer formulas for every
/// outcome of the vbs chain. Mismatches are reported, never thrown.
CrossCheckReport cross_check(std::span<const FilterOp> filters, const CrossCheckOptions& options = {});

}  // namespace vbsswap
