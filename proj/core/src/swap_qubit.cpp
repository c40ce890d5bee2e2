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

#include "vbsswap/swap_qubit.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "chain_engine.hpp"
#include "vbsswap/random.hpp"

namespace vbsswap {
namespace {

constexpr std::array<int, 4> kPlainLabels{0, 1, 2, 3};
constexpr std::array<int, 3> kVbsLabels{1, 2, 3};

const ComplexMatrix& sigma3() {
  static const ComplexMatrix s = pauli(3);
  return s;
}

void check_label(BasisMode mode, int i) {
  if (i < 0 || i > 3) throw std::out_of_range("Pauli index must be 0..3");
  if (mode == BasisMode::kVbs && i == 0) {
    throw std::invalid_argument("the singlet (index 0) is projected out of the vbs basis");
  }
}

detail::ChainSpec make_spec(std::span<const FilterOp> filters, BasisMode mode) {
  detail::ChainSpec spec;
  spec.dim = 2;
  for (const auto& f : filters) {
    spec.filters.push_back(f.matrix());
    spec.bond_concurrences.push_back(bond_concurrence(f));
  }
  for (int label : basis_labels(mode)) {
    spec.node_ops.push_back(pauli(label));
    spec.labels.push_back(label);
  }
  if (mode == BasisMode::kVbs) spec.leading = sigma3();
  return spec;
}

detail::ChainSpec make_spec(const SwapChain& chain) { return make_spec(chain.filters(), chain.mode()); }

std::vector<std::size_t> positions_of(const SwapChain& chain, std::span<const int> indices) {
  std::vector<std::size_t> pos;
  pos.reserve(indices.size());
  for (int i : indices) {
    check_label(chain.mode(), i);
    pos.push_back(static_cast<std::size_t>(chain.mode() == BasisMode::kVbs ? i - 1 : i));
  }
  return pos;
}

}  // namespace

ComplexMatrix pauli(int i) {
  static const std::array<ComplexMatrix, 4> table = [] {
    const ComplexMatrix sx{{0.0, 1.0}, {1.0, 0.0}};
    const ComplexMatrix sz{{1.0, 0.0}, {0.0, -1.0}};
    return std::array<ComplexMatrix, 4>{ComplexMatrix::identity(2), sx, sz, sx * sz};
  }();
  if (i < 0 || i > 3) throw std::out_of_range("Pauli index must be 0..3");
  return table[static_cast<std::size_t>(i)];
}

std::span<const int> basis_labels(BasisMode mode) {
  if (mode == BasisMode::kVbs) return kVbsLabels;
  return kPlainLabels;
}

StateVector bell_state(BasisMode mode, int i) {
  check_label(mode, i);
  if (mode == BasisMode::kPlain) return state_from_operator(pauli(i), 2);
  // (sigma3 (x) sigma_i)|Phi+> = (I (x) sigma_i sigma3^T)|Phi+>
  return state_from_operator(pauli(i) * sigma3().transpose(), 2);
}

SwapChain::SwapChain(std::vector<FilterOp> filters, BasisMode mode)
    : filters_(std::move(filters)), mode_(mode) {
  if (filters_.empty()) throw std::invalid_argument("a chain needs at least one bond");
  for (const auto& f : filters_) {
    if (f.dim() != 2) throw std::invalid_argument("qubit chains take 2-dimensional filters");
  }
}

SwapChain identical_chain(const FilterOp& filter, std::size_t n_bonds, BasisMode mode) {
  return SwapChain(std::vector<FilterOp>(n_bonds, filter), mode);
}

ComplexMatrix chain_operator(const SwapChain& chain, std::span<const int> indices) {
  if (indices.size() != chain.nodes()) {
    throw std::invalid_argument("expected " + std::to_string(chain.nodes()) + " outcome indices, got " +
                                std::to_string(indices.size()));
  }
  const auto pos = positions_of(chain, indices);
  return detail::ordered_product(make_spec(chain), pos);
}

double outcome_weight(const SwapChain& chain, std::span<const int> indices) {
  const auto spec = make_spec(chain);
  return detail::outcome_weight(spec, chain_operator(chain, indices));
}

TradeoffReport enumerate_outcomes(const SwapChain& chain, std::uint64_t budget) {
  return detail::enumerate(make_spec(chain), budget);
}

double log_p_sum_transfer(const SwapChain& chain) { return detail::log_p_sum(make_spec(chain)); }

double p_sum_transfer(const SwapChain& chain) { return std::exp(log_p_sum_transfer(chain)); }

std::vector<double> log_p_sum_profile(const FilterOp& filter, BasisMode mode, std::size_t max_bonds) {
  if (filter.dim() != 2) throw std::invalid_argument("qubit chains take 2-dimensional filters");
  std::vector<double> out;
  out.reserve(max_bonds);
  if (max_bonds == 0) return out;

  const auto spec = make_spec(std::span<const FilterOp>(&filter, 1), mode);
  const ComplexMatrix& t = spec.filters.front();
  const ComplexMatrix t_adj = t.adjoint();
  ComplexMatrix rho = t * t_adj;
  double log_scale = 0.0;
  out.push_back(std::log(rho.trace().real() / 2.0));
  for (std::size_t bonds = 2; bonds <= max_bonds; ++bonds) {
    ComplexMatrix mixed = ComplexMatrix::zeros(2, 2);
    for (const auto& op : spec.node_ops) mixed += op * rho * op.adjoint();
    rho = t * mixed * t_adj;
    const double tr = rho.trace().real();
    rho *= 1.0 / tr;
    log_scale += std::log(tr);
    out.push_back(std::log(rho.trace().real() / 2.0) + log_scale);
  }
  return out;
}

double log_tradeoff_constant(const SwapChain& chain) {
  double log_c = 0.0;
  for (const auto& f : chain.filters()) log_c += std::log(bond_concurrence(f));
  return log_c - log_p_sum_transfer(chain);
}

double tradeoff_constant(const SwapChain& chain) {
  const auto spec = make_spec(chain);
  const double c = detail::product(spec.bond_concurrences);
  if (c == 0.0) return 0.0;
  return std::exp(std::log(c) - detail::log_p_sum(spec));
}

OutcomeSampler::OutcomeSampler(SwapChain chain, std::uint64_t seed)
    : chain_(std::move(chain)), rng_(seed) {
  for (int label : basis_labels(chain_.mode())) {
    ops_.push_back(pauli(label));
    ops_adj_.push_back(ops_.back().adjoint());
  }
  const std::size_t n = chain_.nodes();
  suffix_.assign(n + 1, ComplexMatrix{});
  if (n == 0) return;
  // The leading sigma3 is unitary and drops out of the trace, so E_N = I.
  suffix_[n] = ComplexMatrix::identity(2);
  for (std::size_t k = n; k > 1; --k) {
    const ComplexMatrix t = chain_.filters()[k].matrix();
    const ComplexMatrix inner = t.adjoint() * suffix_[k] * t;
    ComplexMatrix e = ComplexMatrix::zeros(2, 2);
    for (std::size_t i = 0; i < ops_.size(); ++i) e += ops_adj_[i] * inner * ops_[i];
    e *= 1.0 / e.trace().real();
    suffix_[k - 1] = std::move(e);
  }
}

double OutcomeSampler::uniform() { return uniform01(rng_); }

std::vector<int> OutcomeSampler::draw() {
  const std::size_t n = chain_.nodes();
  const auto labels = basis_labels(chain_.mode());
  std::vector<int> result(n);
  const ComplexMatrix t0 = chain_.filters()[0].matrix();
  ComplexMatrix rho = t0 * t0.adjoint();
  std::vector<double> w(ops_.size());
  std::vector<ComplexMatrix> next(ops_.size());
  for (std::size_t k = 1; k <= n; ++k) {
    const ComplexMatrix t = chain_.filters()[k].matrix();
    const ComplexMatrix t_adj = t.adjoint();
    double total = 0.0;
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      next[i] = t * ops_[i] * rho * ops_adj_[i] * t_adj;
      w[i] = std::max(0.0, (suffix_[k] * next[i]).trace().real());
      total += w[i];
    }
    const double u = uniform() * total;
    std::size_t pick = 0;
    double acc = w[0];
    while (pick + 1 < w.size() && (u >= acc || w[pick] == 0.0)) acc += w[++pick];
    result[k - 1] = labels[pick];
    rho = std::move(next[pick]);
    rho *= 1.0 / rho.trace().real();
  }
  return result;
}

FrequencyTable OutcomeSampler::sample(std::uint64_t n_samples) {
  FrequencyTable table;
  for (std::uint64_t s = 0; s < n_samples; ++s) ++table[draw()];
  return table;
}

FrequencyTable sample_outcomes(const SwapChain& chain, std::uint64_t n_samples, std::uint64_t seed) {
  if (n_samples == 0) throw std::invalid_argument("n_samples must be at least 1");
  return OutcomeSampler(chain, seed).sample(n_samples);
}

}  // namespace vbsswap
