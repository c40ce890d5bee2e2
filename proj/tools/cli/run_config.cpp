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

#include "run_config.hpp"

#include <cmath>
#include <sstream>

namespace vbsswap::cli {
namespace {

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) throw UsageError("not a finite number: '" + s + "'");
  return v;
}

Complex parse_entry(std::string s) {
  std::erase_if(s, [](char c) { return c == ' '; });
  if (s.empty()) throw UsageError("empty filter entry");
  if (s.back() != 'i') return {parse_real(s), 0.0};
  s.pop_back();
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t cut = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  const std::string re = cut == std::string::npos ? "" : s.substr(0, cut);
  std::string im = cut == std::string::npos ? s : s.substr(cut);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re), parse_real(im)};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

Complex json_entry(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  if (j.is_string()) return parse_entry(j.get<std::string>());
  throw UsageError("filter entries must be numbers, [re, im] pairs, or strings");
}

std::vector<Complex> json_diag(const nlohmann::json& j) {
  if (!j.is_array()) throw UsageError("a filter diagonal must be an array");
  std::vector<Complex> out;
  for (const auto& e : j) out.push_back(json_entry(e));
  return out;
}

template <typename T>
T json_count(const nlohmann::json& j, const char* key) {
  if (!j.is_number_unsigned()) throw UsageError(std::string("'") + key + "' must be a non-negative integer");
  return j.get<T>();
}

nlohmann::ordered_json complex_json(const Complex& z) { return nlohmann::ordered_json::array({z.real(), z.imag()}); }

}  // namespace

std::string to_string(ChainMode mode) {
  switch (mode) {
    case ChainMode::kPlain: return "plain";
    case ChainMode::kVbs: return "vbs";
    case ChainMode::kQudit: return "qudit";
  }
  return "?";
}

std::string to_string(OutputFormat format) { return format == OutputFormat::kJson ? "json" : "csv"; }

ChainMode parse_mode(const std::string& s) {
  if (s == "plain") return ChainMode::kPlain;
  if (s == "vbs") return ChainMode::kVbs;
  if (s == "qudit") return ChainMode::kQudit;
  throw UsageError("unknown mode '" + s + "' (expected plain, vbs or qudit)");
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::kJson;
  if (s == "csv") return OutputFormat::kCsv;
  throw UsageError("unknown format '" + s + "' (expected json or csv)");
}

std::vector<Complex> parse_diag_list(const std::string& s) {
  std::vector<Complex> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_entry(part));
  if (out.size() < 2) throw UsageError("a filter needs at least two diagonal entries: '" + s + "'");
  return out;
}

std::vector<std::vector<Complex>> parse_filter_list(const std::string& s) {
  std::vector<std::vector<Complex>> out;
  for (const auto& part : split(s, ';')) out.push_back(parse_diag_list(part));
  if (out.empty()) throw UsageError("no filters given");
  return out;
}

void apply_json(RunConfig& config, const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "mode") {
        config.mode = parse_mode(value.get<std::string>());
      } else if (key == "dim") {
        config.dim = json_count<std::size_t>(value, "dim");
      } else if (key == "filters") {
        config.filters.clear();
        if (!value.is_array()) throw UsageError("'filters' must be an array of diagonals");
        for (const auto& f : value) config.filters.push_back(json_diag(f));
      } else if (key == "identical") {
        config.identical = json_diag(value);
      } else if (key == "bonds") {
        config.bonds = json_count<std::size_t>(value, "bonds");
      } else if (key == "seed") {
        config.seed = json_count<std::uint64_t>(value, "seed");
      } else if (key == "samples") {
        config.samples = json_count<std::uint64_t>(value, "samples");
      } else if (key == "tolerance") {
        config.tolerance = value.get<double>();
      } else if (key == "n_min") {
        config.n_min = json_count<std::size_t>(value, "n_min");
      } else if (key == "n_max") {
        config.n_max = json_count<std::size_t>(value, "n_max");
      } else if (key == "chains") {
        config.chains = json_count<std::size_t>(value, "chains");
      } else if (key == "max_nodes") {
        config.max_nodes = json_count<std::size_t>(value, "max_nodes");
      } else if (key == "format") {
        config.format = parse_format(value.get<std::string>());
      } else if (key == "out") {
        config.out = value.get<std::string>();
      } else {
        throw UsageError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad config value: ") + e.what());
  }
}

void validate(const RunConfig& config) {
  if (config.mode != ChainMode::kQudit && config.dim != 2) {
    throw UsageError(to_string(config.mode) + " mode is qubit-only; use --mode qudit for dim " +
                     std::to_string(config.dim));
  }
  if (config.dim < 2) throw UsageError("dim must be at least 2");
  if (config.dim > 8) throw UsageError("dim above 8 is not supported");
  if (config.filters.empty() && config.bonds == 0) throw UsageError("a chain needs at least one bond");
  for (const auto& f : config.filters) {
    if (f.size() != config.dim) {
      throw UsageError("filter has " + std::to_string(f.size()) + " entries, dim is " + std::to_string(config.dim));
    }
  }
  if (!config.identical.empty() && config.identical.size() != config.dim) {
    throw UsageError("--identical has " + std::to_string(config.identical.size()) + " entries, dim is " +
                     std::to_string(config.dim));
  }
  if (!(config.tolerance > 0.0)) throw UsageError("tolerance must be positive");
  if (config.n_min > config.n_max) throw UsageError("scan range is empty");
}

std::vector<FilterOp> resolve_filters(const RunConfig& config) {
  try {
    if (!config.filters.empty()) {
      std::vector<FilterOp> out;
      for (const auto& f : config.filters) out.push_back(make_filter(f));
      return out;
    }
    const std::vector<Complex> diag =
        config.identical.empty() ? std::vector<Complex>(config.dim, Complex{1.0, 0.0}) : config.identical;
    return std::vector<FilterOp>(config.bonds, make_filter(diag));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

nlohmann::ordered_json echo(const RunConfig& config) {
  nlohmann::ordered_json j;
  j["command"] = config.command;
  j["mode"] = to_string(config.mode);
  j["dim"] = config.dim;
  auto filters = nlohmann::ordered_json::array();
  for (const auto& f : config.filters) {
    auto diag = nlohmann::ordered_json::array();
    for (const auto& z : f) diag.push_back(complex_json(z));
    filters.push_back(diag);
  }
  j["filters"] = filters;
  auto identical = nlohmann::ordered_json::array();
  for (const auto& z : config.identical) identical.push_back(complex_json(z));
  j["identical"] = identical;
  j["bonds"] = config.bonds;
  j["seed"] = config.seed;
  j["samples"] = config.samples;
  j["tolerance"] = config.tolerance;
  j["n_min"] = config.n_min;
  j["n_max"] = config.n_max;
  j["chains"] = config.chains;
  j["max_nodes"] = config.max_nodes;
  j["format"] = to_string(config.format);
  return j;
}

}  // namespace vbsswap::cli
