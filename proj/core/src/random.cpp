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

#include "vbsswap/random.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace vbsswap {

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

FilterOp random_filter(std::size_t dim, std::mt19937_64& rng, bool complex_entries) {
  std::vector<Complex> diag(dim);
  for (auto& z : diag) {
    const double modulus = 0.1 + 0.9 * uniform01(rng);
    const double phase = complex_entries ? 2.0 * std::numbers::pi * uniform01(rng) : 0.0;
    z = std::polar(modulus, phase);
  }
  return make_filter(diag);
}

}  // namespace vbsswap
