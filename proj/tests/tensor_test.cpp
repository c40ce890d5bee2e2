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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "support/test_support.hpp"
#include "vbsswap/swap_qudit.hpp"
#include "vbsswap/tensor.hpp"

namespace vbsswap {
namespace {

using testing::random_matrix;
using testing::random_state;

const ComplexMatrix kSx{{0.0, 1.0}, {1.0, 0.0}};
const ComplexMatrix kSz{{1.0, 0.0}, {0.0, -1.0}};

// Index-loop Kronecker oracle.
ComplexMatrix kron_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c)
      out(r, c) = a(r / b.rows(), c / b.cols()) * b(r % b.rows(), c % b.cols());
  return out;
}

// Leibniz expansion over all permutations.
Complex det_oracle(const ComplexMatrix& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Complex total = 0.0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    Complex term = inversions % 2 == 0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

TEST(ComplexMatrixTest, RejectsNonFiniteAndMisSizedEntries) {
  EXPECT_THROW(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), std::invalid_argument);
  EXPECT_THROW(ComplexMatrix(1, 1, {Complex(std::numeric_limits<double>::quiet_NaN(), 0.0)}),
               std::invalid_argument);
  EXPECT_THROW((ComplexMatrix{{1.0, 2.0}, {3.0}}), std::invalid_argument);
}

TEST(KronTest, IdentityTimesIdentity) {
  EXPECT_EQ(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
}

TEST(KronTest, SigmaXTimesSigmaZ) {
  const ComplexMatrix expected{
      {0.0, 0.0, 1.0, 0.0}, {0.0, 0.0, 0.0, -1.0}, {1.0, 0.0, 0.0, 0.0}, {0.0, -1.0, 0.0, 0.0}};
  EXPECT_EQ(max_abs_diff(kron(kSx, kSz), expected), 0.0);
}

TEST(KronTest, MatchesIndexLoopOracle) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_matrix(2, 2, rng);
    const auto b = random_matrix(2 + trial % 3, 1 + trial % 2, rng);
    EXPECT_LE(max_abs_diff(kron(a, b), kron_oracle(a, b)), 1e-15);
  }
}

TEST(KronTest, AssociativeAndMixedProduct) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_matrix(2, 2, rng);
    const auto b = random_matrix(3, 3, rng);
    const auto c = random_matrix(2, 2, rng);
    const auto d = random_matrix(3, 3, rng);
    EXPECT_LE(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-12);
    EXPECT_LE(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)), 1e-12);
  }
}

TEST(PartialTraceTest, MaximallyEntangledGivesHalfIdentity) {
  const StateVector phi = state_from_operator(ComplexMatrix::identity(2), 2);
  const std::size_t keep[] = {1};
  const ComplexMatrix expected{{0.5, 0.0}, {0.0, 0.5}};
  EXPECT_LE(max_abs_diff(partial_trace(phi, keep), expected), 1e-15);
}

TEST(PartialTraceTest, ProductStateKeepsFactor) {
  const std::size_t digits[] = {0, 1};
  const StateVector psi = StateVector::basis({2, 2}, digits);
  const std::size_t keep[] = {0};
  const ComplexMatrix expected{{1.0, 0.0}, {0.0, 0.0}};
  EXPECT_EQ(partial_trace(psi, keep), expected);
}

TEST(PartialTraceTest, MatchesDoubleLoopOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector psi = random_state({2, 2}, rng);
    ComplexMatrix oracle_a(2, 2);
    ComplexMatrix oracle_b(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) {
          oracle_a(i, j) += psi[i * 2 + k] * std::conj(psi[j * 2 + k]);
          oracle_b(i, j) += psi[k * 2 + i] * std::conj(psi[k * 2 + j]);
        }
    const std::size_t keep_a[] = {0};
    const std::size_t keep_b[] = {1};
    EXPECT_LE(max_abs_diff(partial_trace(psi, keep_a), oracle_a), 1e-12);
    EXPECT_LE(max_abs_diff(partial_trace(psi, keep_b), oracle_b), 1e-12);
  }
}

TEST(PartialTraceTest, ThreePartyNonContiguousKeep) {
  std::mt19937_64 rng(4);
  const StateVector psi = random_state({2, 3, 2}, rng);
  ComplexMatrix oracle(4, 4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t a2 = 0; a2 < 2; ++a2)
        for (std::size_t c2 = 0; c2 < 2; ++c2)
          for (std::size_t b = 0; b < 3; ++b)
            oracle(a * 2 + c, a2 * 2 + c2) += psi[(a * 3 + b) * 2 + c] * std::conj(psi[(a2 * 3 + b) * 2 + c2]);
  const std::size_t keep[] = {2, 0};
  EXPECT_LE(max_abs_diff(partial_trace(psi, keep), oracle), 1e-12);
}

TEST(PartialTraceTest, HermitianUnitTracePositive) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector psi = random_state({3, 2, 2}, rng);
    const std::size_t keep[] = {0, 1};
    const ComplexMatrix rho = partial_trace(psi, keep);
    EXPECT_LE(max_abs_diff(rho, rho.adjoint()), 1e-15);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
    for (int probe = 0; probe < 10; ++probe) {
      const StateVector v = random_state({6}, rng);
      Complex q = 0.0;
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) q += std::conj(v[i]) * rho(i, j) * v[j];
      EXPECT_GE(q.real(), -1e-12);
    }
  }
}

TEST(PartialTraceTest, RejectsBadSubsystems) {
  const StateVector phi = state_from_operator(ComplexMatrix::identity(2), 2);
  const std::size_t out_of_range[] = {2};
  const std::size_t dup[] = {0, 0};
  EXPECT_THROW(partial_trace(phi, out_of_range), std::out_of_range);
  EXPECT_THROW(partial_trace(phi, dup), std::invalid_argument);
  EXPECT_THROW(partial_trace(phi, std::span<const std::size_t>{}), std::invalid_argument);
  const std::size_t keep[] = {0};
  EXPECT_THROW(partial_trace(phi.scaled(2.0), keep), std::invalid_argument);
}

TEST(StateFromOperatorTest, IdentityAndSigmaX) {
  const double h = 1.0 / std::sqrt(2.0);
  const StateVector phi = state_from_operator(ComplexMatrix::identity(2), 2);
  const StateVector psi = state_from_operator(kSx, 2);
  const std::vector<Complex> phi_expected{h, 0.0, 0.0, h};
  const std::vector<Complex> psi_expected{0.0, h, h, 0.0};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_LE(std::abs(phi[i] - phi_expected[i]), 1e-16);
    EXPECT_LE(std::abs(psi[i] - psi_expected[i]), 1e-16);
  }
}

TEST(StateFromOperatorTest, ReducedStatesFollowOperator) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(trial % 3);
    const ComplexMatrix m = random_matrix(d, d, rng);
    const StateVector raw = state_from_operator(m, d);
    const double tr = m.frobenius_norm_sq();
    EXPECT_NEAR(raw.norm_sq(), tr / static_cast<double>(d), 1e-12 * tr);
    const StateVector psi = raw.normalized();
    const std::size_t keep_a[] = {0};
    const std::size_t keep_b[] = {1};
    const Complex inv_tr = 1.0 / tr;
    EXPECT_LE(max_abs_diff(partial_trace(psi, keep_a), inv_tr * (m.transpose() * m.conjugate())), 1e-12);
    EXPECT_LE(max_abs_diff(partial_trace(psi, keep_b), inv_tr * (m * m.adjoint())), 1e-12);
  }
}

TEST(DeterminantTest, SimpleCases) {
  EXPECT_EQ(determinant(ComplexMatrix::identity(4)), Complex(1.0));
  EXPECT_EQ(determinant(kSx * kSz), Complex(1.0));
  EXPECT_THROW(determinant(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST(DeterminantTest, ShiftMatrixSignFromPermutationParity) {
  for (std::size_t d = 2; d <= 5; ++d) {
    // The cyclic shift is a d-cycle: d - 1 transpositions.
    const double sign = (d - 1) % 2 == 0 ? 1.0 : -1.0;
    const Complex det = determinant(shift_matrix(d));
    EXPECT_NEAR(det.real(), sign, 1e-15) << "D=" << d;
    EXPECT_NEAR(det.imag(), 0.0, 1e-15);
  }
}

TEST(DeterminantTest, MatchesLeibnizExpansion) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 2; n <= 5; ++n) {
    const ComplexMatrix m = random_matrix(n, n, rng);
    const Complex oracle = det_oracle(m);
    EXPECT_LE(std::abs(determinant(m) - oracle), 1e-12 * std::max(1.0, std::abs(oracle)));
  }
}

TEST(DeterminantTest, Multiplicative) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
    const ComplexMatrix a = random_matrix(n, n, rng);
    const ComplexMatrix b = random_matrix(n, n, rng);
    const Complex lhs = determinant(a * b);
    const Complex rhs = determinant(a) * determinant(b);
    EXPECT_LE(std::abs(lhs - rhs), 1e-10 * std::abs(rhs));
  }
}

TEST(FidelityTest, BasicProperties) {
  std::mt19937_64 rng(9);
  const StateVector u = random_state({2, 2}, rng);
  EXPECT_NEAR(fidelity_up_to_phase(u, u), 1.0, 1e-15);

  const std::size_t d00[] = {0, 0};
  const std::size_t d11[] = {1, 1};
  EXPECT_EQ(fidelity_up_to_phase(StateVector::basis({2, 2}, d00), StateVector::basis({2, 2}, d11)), 0.0);

  for (int trial = 0; trial < 10; ++trial) {
    const double theta = 6.283185307179586 * uniform01(rng);
    EXPECT_NEAR(fidelity_up_to_phase(u.scaled(std::polar(1.0, theta)), u), 1.0, 1e-15);
  }
  EXPECT_THROW(fidelity_up_to_phase(u, random_state({4}, rng)), std::invalid_argument);
}

}  // namespace
}  // namespace vbsswap
