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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vbsswap/filter.hpp"

namespace vbsswap::cli {

/// Bad flags, bad config files, or a config that violates a precondition.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ChainMode { kPlain, kVbs, kQudit };
enum class OutputFormat { kJson, kCsv };

std::string to_string(ChainMode mode);
std::string to_string(OutputFormat format);
ChainMode parse_mode(const std::string& s);
OutputFormat parse_format(const std::string& s);

/// Parses "a,b,c". Entries are real ("0.5") or complex ("1+2i", "-0.5i").
std::vector<Complex> parse_diag_list(const std::string& s);
/// Parses "a0,b0;a1,b1;...".
std::vector<std::vector<Complex>> parse_filter_list(const std::string& s);

struct RunConfig {
  std::string command;
  ChainMode mode = ChainMode::kVbs;
  std::size_t dim = 2;
  std::vector<std::vector<Complex>> filters;   // explicit, one diagonal per bond
  std::vector<Complex> identical;              // used when filters is empty
  std::size_t bonds = 2;
  std::uint64_t seed = 42;
  std::uint64_t samples = 100000;
  double tolerance = 1e-9;
  std::size_t n_min = 1;
  std::size_t n_max = 8;
  std::size_t chains = 20;     // verify: size of the random suite
  std::size_t max_nodes = 4;   // verify: largest N in the random suite
  OutputFormat format = OutputFormat::kJson;
  std::optional<std::string> out;
  bool corrupt_bell_order = false;  // verify negative control

  bool has_explicit_filters() const { return !filters.empty() || !identical.empty(); }
};

/// Overlays the keys present in a JSON config object onto `config`.
void apply_json(RunConfig& config, const nlohmann::json& j);

/// Checks cross-field invariants (vbs forces dim 2, dims agree, ...).
void validate(const RunConfig& config);

/// Bond-normalized filters described by the config.
std::vector<FilterOp> resolve_filters(const RunConfig& config);

nlohmann::ordered_json echo(const RunConfig& config);

}  // namespace vbsswap::cli
