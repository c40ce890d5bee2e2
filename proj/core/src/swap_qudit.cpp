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

#include "vbsswap/swap_qudit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "chain_engine.hpp"

namespace vbsswap {
namespace {

void check_dim(std::size_t dim) {
  if (dim < 2) throw std::invalid_argument("qudit dimension must be at least 2");
}

ComplexMatrix matrix_power(const ComplexMatrix& base, std::size_t p) {
  ComplexMatrix out = ComplexMatrix::identity(base.rows());
  for (std::size_t i = 0; i < p; ++i) out = out * base;
  return out;
}

detail::ChainSpec make_spec(const QuditChain& chain) {
  detail::ChainSpec spec;
  const std::size_t d = chain.dim();
  spec.dim = d;
  for (const auto& f : chain.filters()) {
    spec.filters.push_back(f.matrix());
    spec.bond_concurrences.push_back(bond_concurrence(f));
  }
  // Op position equals the digit m + D n.
  spec.node_ops.resize(d * d);
  spec.labels.resize(d * d);
  for (std::size_t n = 0; n < d; ++n)
    for (std::size_t m = 0; m < d; ++m) {
      spec.node_ops[m + d * n] = gen_pauli(d, m, n).matrix;
      spec.labels[m + d * n] = static_cast<int>(m + d * n);
    }
  return spec;
}

}  // namespace

Complex root_of_unity(std::size_t dim, std::size_t k) {
  check_dim(dim);
  k %= dim;
  if ((4 * k) % dim == 0) {
    switch ((4 * k) / dim) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(dim);
  return {std::cos(angle), std::sin(angle)};
}

ComplexMatrix shift_matrix(std::size_t dim) {
  check_dim(dim);
  ComplexMatrix x(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) x((j + 1) % dim, j) = 1.0;
  return x;
}

ComplexMatrix clock_matrix(std::size_t dim) {
  check_dim(dim);
  ComplexMatrix z(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) z(j, j) = root_of_unity(dim, j);
  return z;
}

WeylOp gen_pauli(std::size_t dim, std::size_t m, std::size_t n) {
  check_dim(dim);
  if (m >= dim || n >= dim) throw std::out_of_range("Weyl indices must lie in 0..D-1");
  WeylOp op;
  op.dim = dim;
  op.m = m;
  op.n = n;
  op.omega = root_of_unity(dim, 1);
  op.matrix = matrix_power(shift_matrix(dim), m) * matrix_power(clock_matrix(dim), n);
  return op;
}

StateVector qudit_bell(std::size_t dim, std::size_t m, std::size_t n) {
  return state_from_operator(gen_pauli(dim, m, n).matrix, dim);
}

WeylIndex WeylIndex::from_digit(int digit, std::size_t dim) {
  if (digit < 0 || static_cast<std::size_t>(digit) >= dim * dim) {
    throw std::out_of_range("Weyl digit out of range");
  }
  const auto d = static_cast<std::size_t>(digit);
  return {d % dim, d / dim};
}

QuditChain::QuditChain(std::size_t dim, std::vector<FilterOp> filters)
    : dim_(dim), filters_(std::move(filters)) {
  check_dim(dim_);
  if (filters_.empty()) throw std::invalid_argument("a chain needs at least one bond");
  for (const auto& f : filters_) {
    if (f.dim() != dim_) throw std::invalid_argument("filter dimension does not match chain dimension");
  }
}

ComplexMatrix qudit_chain_operator(const QuditChain& chain, std::span<const WeylIndex> outcome) {
  if (outcome.size() != chain.nodes()) {
    throw std::invalid_argument("expected " + std::to_string(chain.nodes()) + " outcome entries, got " +
                                std::to_string(outcome.size()));
  }
  std::vector<std::size_t> pos;
  pos.reserve(outcome.size());
  for (const auto& w : outcome) {
    if (w.m >= chain.dim() || w.n >= chain.dim()) throw std::out_of_range("Weyl indices must lie in 0..D-1");
    pos.push_back(w.m + chain.dim() * w.n);
  }
  return detail::ordered_product(make_spec(chain), pos);
}

double gen_concurrence(const ComplexMatrix& m, std::size_t dim) {
  if (m.rows() != dim || m.cols() != dim) throw std::invalid_argument("gen_concurrence: M must be D x D");
  if (m.frobenius_norm_sq() == 0.0) throw std::invalid_argument("gen_concurrence: zero operator");
  return detail::det_concurrence(m, dim);
}

TradeoffReport enumerate_qudit_outcomes(const QuditChain& chain, std::uint64_t budget) {
  return detail::enumerate(make_spec(chain), budget);
}

}  // namespace vbsswap
