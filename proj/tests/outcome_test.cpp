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

#include <random>
#include <vector>

#include "vbsswap/outcome.hpp"
#include "vbsswap/random.hpp"

namespace vbsswap {
namespace {

TEST(OutcomeCodeTest, LittleEndian) {
  const int idx[] = {2, 0, 1};
  EXPECT_EQ(encode_outcome(idx, 3), 2u + 0u * 3u + 1u * 9u);
  EXPECT_EQ(decode_outcome(11, 3, 3), (std::vector<int>{2, 0, 1}));
  EXPECT_EQ(encode_outcome({}, 4), 0u);
}

TEST(OutcomeCodeTest, RoundTripProperty) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t base = 2 + static_cast<std::size_t>(uniform01(rng) * 63.0);
    const std::size_t len = static_cast<std::size_t>(uniform01(rng) * 8.0);
    std::vector<int> idx(len);
    for (auto& i : idx) i = static_cast<int>(uniform01(rng) * static_cast<double>(base));
    EXPECT_EQ(decode_outcome(encode_outcome(idx, base), len, base), idx);
  }
}

TEST(OutcomeCodeTest, RejectsOutOfRangeSymbols) {
  const int idx[] = {0, 3};
  EXPECT_THROW(encode_outcome(idx, 3), std::out_of_range);
  EXPECT_THROW(decode_outcome(9, 2, 3), std::out_of_range);
}

TEST(OutcomeFormatTest, NodeOneFirst) {
  const int idx[] = {1, 2, 3};
  EXPECT_EQ(format_outcome(idx), "123");
  const int wide[] = {10, 35, 36, 63};
  EXPECT_EQ(format_outcome(wide), "azA/");
  EXPECT_EQ(format_outcome({}), "");
}

TEST(OutcomeBudgetTest, CountAndGuard) {
  EXPECT_EQ(checked_outcome_count(3, 16, 43046721), 43046721u);
  EXPECT_THROW(checked_outcome_count(3, 17, 43046721), BudgetExceeded);
  EXPECT_EQ(checked_outcome_count(9, 0, 1), 1u);
  // Must not overflow on huge lengths.
  EXPECT_THROW(checked_outcome_count(64, 100, 10'000'000), BudgetExceeded);
}

}  // namespace
}  // namespace vbsswap
