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

// Seeded generators shared by the unit and acceptance suites.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "vbsswap/filter.hpp"
#include "vbsswap/random.hpp"
#include "vbsswap/tensor.hpp"

namespace vbsswap::testing {

inline double gaussian(std::mt19937_64& rng) {
  // Box-Muller; 1 - u keeps the log argument away from zero.
  const double u = 1.0 - uniform01(rng);
  const double v = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

inline Complex random_complex(std::mt19937_64& rng) { return {gaussian(rng), gaussian(rng)}; }

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::vector<Complex> e(rows * cols);
  for (auto& z : e) z = random_complex(rng);
  return {rows, cols, std::move(e)};
}

inline StateVector random_state(std::vector<std::size_t> dims, std::mt19937_64& rng) {
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  std::vector<Complex> amps(n);
  for (auto& z : amps) z = random_complex(rng);
  return StateVector(std::move(dims), std::move(amps)).normalized();
}

// Haar-ish unitary from Gram-Schmidt on a Gaussian matrix.
inline ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  ComplexMatrix a = random_matrix(n, n, rng);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t p = 0; p < c; ++p) {
      Complex dot = 0.0;
      for (std::size_t r = 0; r < n; ++r) dot += std::conj(a(r, p)) * a(r, c);
      for (std::size_t r = 0; r < n; ++r) a(r, c) -= dot * a(r, p);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm += std::norm(a(r, c));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < n; ++r) a(r, c) /= norm;
  }
  return a;
}

inline std::vector<FilterOp> random_filters(std::size_t bonds, std::size_t dim, std::mt19937_64& rng,
                                            bool complex_entries = true) {
  std::vector<FilterOp> out;
  out.reserve(bonds);
  for (std::size_t k = 0; k < bonds; ++k) out.push_back(random_filter(dim, rng, complex_entries));
  return out;
}

// (A (x) B)|psi> for a two-subsystem state, by explicit index loops.
inline StateVector apply_local(const ComplexMatrix& a, const ComplexMatrix& b, const StateVector& psi) {
  const std::size_t da = a.rows();
  const std::size_t db = b.rows();
  std::vector<Complex> out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < db; ++l) out[i * db + j] += a(i, k) * b(j, l) * psi[k * db + l];
  return {psi.dims(), std::move(out)};
}

}  // namespace vbsswap::testing
