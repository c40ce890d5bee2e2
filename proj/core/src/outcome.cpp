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

#include "vbsswap/outcome.hpp"

#include <string_view>

namespace vbsswap {
namespace {
constexpr std::string_view kSymbols =
    "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ+/";
}

std::uint64_t encode_outcome(std::span<const int> indices, std::size_t base) {
  std::uint64_t code = 0;
  for (std::size_t k = indices.size(); k-- > 0;) {
    if (indices[k] < 0 || static_cast<std::size_t>(indices[k]) >= base) {
      throw std::out_of_range("outcome digit out of range");
    }
    code = code * base + static_cast<std::uint64_t>(indices[k]);
  }
  return code;
}

std::vector<int> decode_outcome(std::uint64_t code, std::size_t length, std::size_t base) {
  std::vector<int> out(length);
  for (std::size_t k = 0; k < length; ++k) {
    out[k] = static_cast<int>(code % base);
    code /= base;
  }
  if (code != 0) throw std::out_of_range("outcome code too large for its length");
  return out;
}

std::string format_outcome(std::span<const int> indices) {
  std::string s;
  s.reserve(indices.size());
  for (int i : indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= kSymbols.size()) {
      throw std::out_of_range("outcome digit has no symbol");
    }
    s.push_back(kSymbols[static_cast<std::size_t>(i)]);
  }
  return s;
}

std::uint64_t checked_outcome_count(std::size_t base, std::size_t length, std::uint64_t budget) {
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < length; ++k) {
    if (count > budget / base) {
      throw BudgetExceeded(std::to_string(base) + "^" + std::to_string(length) +
                           " outcomes exceed the enumeration budget of " + std::to_string(budget) +
                           "; use sampling or the transfer map instead");
    }
    count *= base;
  }
  return count;
}

}  // namespace vbsswap
