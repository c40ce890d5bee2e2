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

#include <cstdint>
#include <random>

#include "vbsswap/filter.hpp"

namespace vbsswap {

/// Uniform double in [0, 1) from the top 53 bits of one draw. Unlike
/// std::uniform_real_distribution the sequence is the same on every standard
/// library.
double uniform01(std::mt19937_64& rng);

/// Non-singular filter with entry moduli in [0.1, 1) and uniform phases when
/// `complex_entries` is set, bond-normalized.
FilterOp random_filter(std::size_t dim, std::mt19937_64& rng, bool complex_entries = true);

}  // namespace vbsswap
