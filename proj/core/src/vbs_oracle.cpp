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

#include "vbsswap/vbs_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "vbsswap/swap_qubit.hpp"

namespace vbsswap {
namespace {

// Projections below this squared norm are treated as exactly zero.
constexpr double kVanishingWeight = 1e-30;

// Kept local so the oracle does not share the Pauli table with the transfer code.
ComplexMatrix local_sigma(int i) {
  switch (i) {
    case 0: return ComplexMatrix::identity(2);
    case 1: return {{0.0, 1.0}, {1.0, 0.0}};
    case 2: return {{1.0, 0.0}, {0.0, -1.0}};
    case 3: return {{0.0, -1.0}, {1.0, 0.0}};
    default: throw std::out_of_range("Pauli index must be 0..3");
  }
}

// (sigma3 (x) sigma_i)(|00> + |11>)/sqrt2 as four amplitudes.
std::vector<Complex> triplet_bell(int i) {
  if (i < 1 || i > 3) throw std::out_of_range("vbs Bell index must be 1..3");
  const ComplexMatrix op = kron(local_sigma(3), local_sigma(i));
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<Complex> out(4);
  for (std::size_t r = 0; r < 4; ++r) out[r] = (op(r, 0) + op(r, 3)) * h;
  return out;
}

void check_nodes(std::size_t n_bonds) {
  if (n_bonds < 2 || n_bonds - 1 > kOracleMaxNodes) {
    throw std::invalid_argument("oracle supports 1.." + std::to_string(kOracleMaxNodes) +
                                " internal sites, got " + std::to_string(n_bonds == 0 ? 0 : n_bonds - 1));
  }
}

}  // namespace

std::size_t SiteLayout::pair_start(std::size_t site) const {
  if (site < 1 || site > internal_sites()) throw std::out_of_range("not an internal site");
  return 2 * site - 1;
}

ComplexMatrix symmetric_projector() {
  // I - |singlet><singlet| with singlet (|01> - |10>)/sqrt2.
  ComplexMatrix s = ComplexMatrix::identity(4);
  s(1, 1) = 0.5;
  s(2, 2) = 0.5;
  s(1, 2) = 0.5;
  s(2, 1) = 0.5;
  return s;
}

StateVector apply_pair_operator(const StateVector& state, const ComplexMatrix& op, std::size_t first) {
  const std::size_t n = state.dims().size();
  if (first + 1 >= n) throw std::out_of_range("pair operator runs past the last qubit");
  if (op.rows() != 4 || op.cols() != 4) throw std::invalid_argument("pair operator must be 4x4");
  const std::size_t low = std::size_t{1} << (n - first - 2);
  const std::size_t high = state.size() / (4 * low);
  std::vector<Complex> out(state.size());
  for (std::size_t h = 0; h < high; ++h)
    for (std::size_t l = 0; l < low; ++l)
      for (std::size_t r = 0; r < 4; ++r) {
        Complex acc = 0.0;
        for (std::size_t c = 0; c < 4; ++c) acc += op(r, c) * state[(h * 4 + c) * low + l];
        out[(h * 4 + r) * low + l] = acc;
      }
  return {state.dims(), std::move(out)};
}

StateVector build_vbs_state(std::span<const FilterOp> filters, bool project_sites) {
  check_nodes(filters.size());
  StateVector psi;
  for (std::size_t j = 0; j < filters.size(); ++j) {
    if (filters[j].dim() != 2) throw std::invalid_argument("VBS bonds are qubit pairs");
    // (alpha a_j^dag b_{j+1}^dag - beta b_j^dag a_{j+1}^dag)|vac> = alpha|01> - beta|10>
    StateVector bond({2, 2}, {0.0, filters[j].alpha(), -filters[j].beta(), 0.0});
    psi = j == 0 ? bond : StateVector::product(psi, bond);
  }
  if (project_sites) {
    const SiteLayout layout{filters.size()};
    const ComplexMatrix s = symmetric_projector();
    for (std::size_t k = 1; k <= layout.internal_sites(); ++k) {
      psi = apply_pair_operator(psi, s, layout.pair_start(k));
    }
  }
  return psi.normalized();
}

MeasurementResult measure_internal_sites(const StateVector& state, std::span<const int> indices) {
  const std::size_t n = state.dims().size();
  if (n % 2 != 0 || n < 4) throw std::invalid_argument("not a chain state");
  const SiteLayout layout{n / 2};
  if (indices.size() != layout.internal_sites()) {
    throw std::invalid_argument("expected one Bell index per internal site");
  }

  // Contract from the last site so earlier pair offsets stay valid.
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  std::size_t qubits = n;
  for (std::size_t k = layout.internal_sites(); k >= 1; --k) {
    const auto bra = triplet_bell(indices[k - 1]);
    const std::size_t first = layout.pair_start(k);
    const std::size_t low = std::size_t{1} << (qubits - first - 2);
    const std::size_t high = amps.size() / (4 * low);
    std::vector<Complex> out(high * low);
    for (std::size_t h = 0; h < high; ++h)
      for (std::size_t l = 0; l < low; ++l) {
        Complex acc = 0.0;
        for (std::size_t b = 0; b < 4; ++b) acc += std::conj(bra[b]) * amps[(h * 4 + b) * low + l];
        out[h * low + l] = acc;
      }
    amps = std::move(out);
    qubits -= 2;
  }

  StateVector pair({2, 2}, std::move(amps));
  MeasurementResult result;
  result.weight = pair.norm_sq();
  if (result.weight <= kVanishingWeight) {
    result.weight = 0.0;
    return result;
  }
  result.end_pair = pair.normalized();
  return result;
}

CrossCheckReport cross_check(std::span<const FilterOp> filters, const CrossCheckOptions& options) {
  const StateVector vbs = build_vbs_state(filters);
  const SwapChain chain(std::vector<FilterOp>(filters.begin(), filters.end()), BasisMode::kVbs);
  const TradeoffReport table = enumerate_outcomes(chain);

  CrossCheckReport report;
  report.entries.reserve(table.records.size());
  for (const auto& rec : table.records) {
    std::vector<int> measured = rec.indices;
    if (options.permute_bell_labels) {
      for (int& i : measured) i = i == 1 ? 3 : (i == 3 ? 1 : i);
    }
    const MeasurementResult m = measure_internal_sites(vbs, measured);

    CrossCheckEntry e;
    e.indices = rec.indices;
    e.oracle_weight = m.weight;
    e.transfer_prob = rec.prob;
    e.weight_deviation = std::abs(m.weight - rec.prob);
    if (m.end_pair && rec.weight > 0.0) {
      const StateVector predicted = state_from_operator(rec.final_op, 2).normalized();
      e.fidelity = fidelity_up_to_phase(*m.end_pair, predicted);
    } else if (m.end_pair.has_value() != (rec.weight > 0.0)) {
      e.fidelity = 0.0;
    }
    e.passed = e.weight_deviation <= options.tolerance && e.fidelity >= 1.0 - options.tolerance;

    report.worst_weight_deviation = std::max(report.worst_weight_deviation, e.weight_deviation);
    report.worst_fidelity = std::min(report.worst_fidelity, e.fidelity);
    report.passed = report.passed && e.passed;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace vbsswap
