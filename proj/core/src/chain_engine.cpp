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

#include "chain_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vbsswap::detail {

ComplexMatrix ordered_product(const ChainSpec& spec, std::span<const std::size_t> op_positions) {
  if (op_positions.size() != spec.nodes()) {
    throw std::invalid_argument("outcome has " + std::to_string(op_positions.size()) +
                                " entries, chain has " + std::to_string(spec.nodes()) + " nodes");
  }
  ComplexMatrix m = spec.filters.front();
  for (std::size_t k = 0; k < op_positions.size(); ++k) {
    m = spec.filters[k + 1] * (spec.node_ops.at(op_positions[k]) * m);
  }
  if (spec.leading) m = *spec.leading * m;
  return m;
}

double outcome_weight(const ChainSpec& spec, const ComplexMatrix& m) {
  return m.frobenius_norm_sq() / static_cast<double>(spec.dim);
}

double det_concurrence(const ComplexMatrix& m, std::size_t dim) {
  const double tr = m.frobenius_norm_sq();
  if (tr == 0.0) return 0.0;
  const double abs_det = std::abs(determinant(m));
  if (dim == 2) return 2.0 * abs_det / tr;
  const auto d = static_cast<double>(dim);
  return d * std::pow(abs_det, 2.0 / d) / tr;
}

double product(std::span<const double> xs) {
  double p = 1.0;
  for (double x : xs) p *= x;
  return p;
}

TradeoffReport enumerate(const ChainSpec& spec, std::uint64_t budget) {
  const std::size_t nodes = spec.nodes();
  const std::size_t base = spec.node_ops.size();
  const std::uint64_t count = checked_outcome_count(base, nodes, budget);

  TradeoffReport report;
  report.dim = spec.dim;
  report.outcomes_per_node = base;
  report.bond_concurrences = spec.bond_concurrences;
  report.concurrence_product = product(spec.bond_concurrences);
  report.records.resize(count);

  // Depth-first over nodes with a stack of prefix products; each leaf lands at
  // its little-endian code so the table order does not depend on traversal.
  std::vector<ComplexMatrix> prefix(nodes + 1);
  prefix[0] = spec.filters.front();
  std::vector<std::size_t> pos(nodes, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == nodes) {
      ComplexMatrix m = spec.leading ? *spec.leading * prefix[nodes] : prefix[nodes];
      std::uint64_t code = 0;
      std::vector<int> labels(nodes);
      for (std::size_t k = nodes; k-- > 0;) {
        code = code * base + pos[k];
        labels[k] = spec.labels[pos[k]];
      }
      OutcomeRecord& rec = report.records[code];
      rec.indices = std::move(labels);
      rec.weight = m.frobenius_norm_sq() / static_cast<double>(spec.dim);
      rec.concurrence = rec.weight > 0.0 ? det_concurrence(m, spec.dim) : 0.0;
      rec.final_op = std::move(m);
      // Advance to the next sibling, popping finished levels.
      while (depth > 0 && pos[depth - 1] + 1 == base) {
        pos[depth - 1] = 0;
        --depth;
      }
      if (depth == 0) break;
      ++pos[depth - 1];
      prefix[depth] = spec.filters[depth] * (spec.node_ops[pos[depth - 1]] * prefix[depth - 1]);
      continue;
    }
    ++depth;
    prefix[depth] = spec.filters[depth] * (spec.node_ops[pos[depth - 1]] * prefix[depth - 1]);
  }

  double p_sum = 0.0;
  for (const auto& rec : report.records) p_sum += rec.weight;
  report.p_sum = p_sum;
  report.constant = report.concurrence_product / p_sum;
  for (auto& rec : report.records) {
    rec.prob = rec.weight / p_sum;
    if (rec.weight > 0.0) {
      report.max_residual = std::max(report.max_residual, std::abs(rec.prob_times_c() - report.constant));
    }
  }
  return report;
}

double log_p_sum(const ChainSpec& spec) {
  ComplexMatrix rho = spec.filters.front() * spec.filters.front().adjoint();
  double log_scale = 0.0;
  std::vector<ComplexMatrix> op_adj;
  op_adj.reserve(spec.node_ops.size());
  for (const auto& op : spec.node_ops) op_adj.push_back(op.adjoint());

  for (std::size_t k = 1; k < spec.filters.size(); ++k) {
    ComplexMatrix mixed = ComplexMatrix::zeros(spec.dim, spec.dim);
    for (std::size_t i = 0; i < spec.node_ops.size(); ++i) mixed += spec.node_ops[i] * rho * op_adj[i];
    const ComplexMatrix& t = spec.filters[k];
    rho = t * mixed * t.adjoint();
    const double tr = rho.trace().real();
    rho *= 1.0 / tr;
    log_scale += std::log(tr);
  }
  return std::log(rho.trace().real() / static_cast<double>(spec.dim)) + log_scale;
}

}  // namespace vbsswap::detail
