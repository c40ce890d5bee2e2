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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "vbsswap/random.hpp"
#include "vbsswap/swap_qubit.hpp"
#include "vbsswap/swap_qudit.hpp"
#include "vbsswap/vbs_oracle.hpp"
#include "vbsswap/version.hpp"

namespace vbsswap::cli {
namespace {

using ojson = nlohmann::ordered_json;

ojson header(const RunConfig& config) {
  ojson j;
  j["version"] = kVersion;
  j["command"] = config.command;
  j["seed"] = config.seed;
  j["config_echo"] = echo(config);
  return j;
}

void write_csv_header(const RunConfig& config, std::ostream& out) {
  out << "# vbsswap " << kVersion << ' ' << config.command << '\n';
  out << "# seed=" << config.seed << '\n';
}

ojson filters_json(const std::vector<FilterOp>& filters) {
  ojson arr = ojson::array();
  for (const auto& f : filters) {
    ojson diag = ojson::array();
    for (const auto& z : f.diag()) diag.push_back(ojson::array({z.real(), z.imag()}));
    arr.push_back(diag);
  }
  return arr;
}

BasisMode basis_of(ChainMode mode) { return mode == ChainMode::kVbs ? BasisMode::kVbs : BasisMode::kPlain; }

// Core preconditions surface as std::invalid_argument; the CLI reports them as usage errors.
template <typename F>
auto as_usage(F&& f) {
  try {
    return f();
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

TradeoffReport enumerate_config(const RunConfig& config, const std::vector<FilterOp>& filters) {
  return as_usage([&] {
    if (config.mode == ChainMode::kQudit) return enumerate_qudit_outcomes(QuditChain(config.dim, filters));
    return enumerate_outcomes(SwapChain(filters, basis_of(config.mode)));
  });
}

const FilterOp& require_identical(const std::vector<FilterOp>& filters) {
  for (const auto& f : filters) {
    if (!(f == filters.front())) throw UsageError("scan needs identical filters on every bond");
  }
  return filters.front();
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};

LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
  LineFit fit;
  const auto n = static_cast<double>(xs.size());
  if (xs.size() < 2) {
    if (!ys.empty()) fit.intercept = ys.front();
    return fit;
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    fit.max_residual = std::max(fit.max_residual, std::abs(ys[i] - (fit.intercept + fit.slope * xs[i])));
  }
  return fit;
}

}  // namespace

std::string format_number(double x) { return nlohmann::json(x).dump(); }

int cmd_swap(const RunConfig& config, std::ostream& out) {
  validate(config);
  const auto filters = resolve_filters(config);
  const TradeoffReport report = enumerate_config(config, filters);

  if (config.format == OutputFormat::kCsv) {
    write_csv_header(config, out);
    out << "# dim=" << config.dim << "\n# mode=" << to_string(config.mode) << "\n# n_bonds=" << filters.size()
        << "\n# p_sum=" << format_number(report.p_sum)
        << "\n# tradeoff_constant=" << format_number(report.constant)
        << "\n# max_residual=" << format_number(report.max_residual) << '\n';
    out << "index,weight,prob,concurrence,prob_times_c\n";
    for (const auto& rec : report.records) {
      out << format_outcome(rec.indices) << ',' << format_number(rec.weight) << ',' << format_number(rec.prob)
          << ',' << format_number(rec.concurrence) << ',' << format_number(rec.prob_times_c()) << '\n';
    }
    return kExitOk;
  }

  ojson j = header(config);
  j["dim"] = config.dim;
  j["mode"] = to_string(config.mode);
  j["n_bonds"] = filters.size();
  j["normalized_filters"] = filters_json(filters);
  j["p_sum"] = report.p_sum;
  j["bond_concurrences"] = report.bond_concurrences;
  j["concurrence_product"] = report.concurrence_product;
  j["tradeoff_constant"] = report.constant;
  j["max_residual"] = report.max_residual;
  ojson outcomes = ojson::array();
  for (const auto& rec : report.records) {
    ojson o;
    o["index"] = format_outcome(rec.indices);
    o["weight"] = rec.weight;
    o["prob"] = rec.prob;
    o["concurrence"] = rec.concurrence;
    o["prob_times_c"] = rec.prob_times_c();
    outcomes.push_back(std::move(o));
  }
  j["outcomes"] = std::move(outcomes);
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_scan(const RunConfig& config, std::ostream& out) {
  validate(config);
  if (config.n_max > kScanMaxNodes) {
    throw BudgetExceeded("scan is limited to N <= " + std::to_string(kScanMaxNodes));
  }
  const auto filters = resolve_filters(config);
  const FilterOp& filter = require_identical(filters);
  const double log_c = std::log(bond_concurrence(filter));

  // Entry k of the profile is log P_sum for k + 1 bonds. A complete qudit
  // Bell basis has P_sum = D^(2k) for every filter.
  std::vector<double> log_p_sum(config.n_max + 1);
  if (config.mode == ChainMode::kQudit) {
    const double log_d2 = 2.0 * std::log(static_cast<double>(config.dim));
    for (std::size_t k = 0; k < log_p_sum.size(); ++k) log_p_sum[k] = static_cast<double>(k) * log_d2;
  } else {
    log_p_sum = log_p_sum_profile(filter, basis_of(config.mode), config.n_max + 1);
  }

  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> log_constants;
  for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
    const double lc = static_cast<double>(n + 1) * log_c - log_p_sum[n];
    log_constants.push_back(lc);
    if (std::isfinite(lc)) {
      xs.push_back(static_cast<double>(n));
      ys.push_back(lc);
    }
  }
  const LineFit fit = fit_line(xs, ys);

  if (config.format == OutputFormat::kCsv) {
    write_csv_header(config, out);
    out << "# slope=" << format_number(fit.slope) << "\n# intercept=" << format_number(fit.intercept)
        << "\n# max_fit_residual=" << format_number(fit.max_residual) << '\n';
    out << "n,constant,log_constant\n";
    for (std::size_t k = 0; k < log_constants.size(); ++k) {
      out << config.n_min + k << ',' << format_number(std::exp(log_constants[k])) << ','
          << format_number(log_constants[k]) << '\n';
    }
    return kExitOk;
  }

  ojson j = header(config);
  j["dim"] = config.dim;
  j["mode"] = to_string(config.mode);
  j["normalized_filter"] = filters_json({filter}).front();
  j["bond_concurrence"] = bond_concurrence(filter);
  ojson rows = ojson::array();
  for (std::size_t k = 0; k < log_constants.size(); ++k) {
    ojson r;
    r["n"] = config.n_min + k;
    r["constant"] = std::exp(log_constants[k]);
    r["log_constant"] = log_constants[k];
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["slope"] = fit.slope;
  j["intercept"] = fit.intercept;
  j["max_fit_residual"] = fit.max_residual;
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_sample(const RunConfig& config, std::ostream& out) {
  validate(config);
  if (config.mode == ChainMode::kQudit) throw UsageError("sample supports plain and vbs modes only");
  if (config.samples == 0) throw UsageError("--samples must be at least 1");
  const auto filters = resolve_filters(config);
  const SwapChain chain = as_usage([&] { return SwapChain(filters, basis_of(config.mode)); });
  const TradeoffReport exact = enumerate_outcomes(chain);
  const FrequencyTable counts = sample_outcomes(chain, config.samples, config.seed);

  const auto total = static_cast<double>(config.samples);
  double tv = 0.0;
  std::vector<std::uint64_t> cell_counts;
  for (const auto& rec : exact.records) {
    const auto it = counts.find(rec.indices);
    const std::uint64_t c = it == counts.end() ? 0 : it->second;
    cell_counts.push_back(c);
    tv += std::abs(static_cast<double>(c) / total - rec.prob);
  }
  tv *= 0.5;

  if (config.format == OutputFormat::kCsv) {
    write_csv_header(config, out);
    out << "# samples=" << config.samples << "\n# total_variation=" << format_number(tv) << '\n';
    out << "index,count,frequency,prob\n";
    for (std::size_t k = 0; k < exact.records.size(); ++k) {
      out << format_outcome(exact.records[k].indices) << ',' << cell_counts[k] << ','
          << format_number(static_cast<double>(cell_counts[k]) / total) << ','
          << format_number(exact.records[k].prob) << '\n';
    }
    return kExitOk;
  }

  ojson j = header(config);
  j["dim"] = config.dim;
  j["mode"] = to_string(config.mode);
  j["n_bonds"] = filters.size();
  j["normalized_filters"] = filters_json(filters);
  j["samples"] = config.samples;
  j["total_variation"] = tv;
  ojson cells = ojson::array();
  for (std::size_t k = 0; k < exact.records.size(); ++k) {
    ojson c;
    c["index"] = format_outcome(exact.records[k].indices);
    c["count"] = cell_counts[k];
    c["frequency"] = static_cast<double>(cell_counts[k]) / total;
    c["prob"] = exact.records[k].prob;
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  validate(config);
  if (config.mode != ChainMode::kVbs) throw UsageError("verify checks vbs chains only");
  constexpr std::size_t kMaxVerifyNodes = 5;

  std::vector<std::vector<FilterOp>> suite;
  if (config.has_explicit_filters()) {
    suite.push_back(resolve_filters(config));
  } else {
    if (config.max_nodes < 1 || config.max_nodes > kMaxVerifyNodes) {
      throw UsageError("--max-nodes must lie in 1.." + std::to_string(kMaxVerifyNodes));
    }
    std::mt19937_64 rng(config.seed);
    for (std::size_t c = 0; c < config.chains; ++c) {
      const auto nodes = 1 + static_cast<std::size_t>(uniform01(rng) * static_cast<double>(config.max_nodes));
      std::vector<FilterOp> filters;
      for (std::size_t k = 0; k <= nodes; ++k) filters.push_back(random_filter(2, rng));
      suite.push_back(std::move(filters));
    }
  }
  for (const auto& filters : suite) {
    if (filters.size() < 2 || filters.size() - 1 > kMaxVerifyNodes) {
      throw UsageError("verify needs 1.." + std::to_string(kMaxVerifyNodes) + " internal nodes");
    }
  }

  CrossCheckOptions options;
  options.tolerance = config.tolerance;
  options.permute_bell_labels = config.corrupt_bell_order;

  bool all_passed = true;
  double worst_fidelity = 1.0;
  double worst_dev = 0.0;
  std::vector<CrossCheckReport> reports;
  for (const auto& filters : suite) {
    reports.push_back(cross_check(filters, options));
    all_passed = all_passed && reports.back().passed;
    worst_fidelity = std::min(worst_fidelity, reports.back().worst_fidelity);
    worst_dev = std::max(worst_dev, reports.back().worst_weight_deviation);
  }

  if (config.format == OutputFormat::kCsv) {
    write_csv_header(config, out);
    out << "# passed=" << (all_passed ? "true" : "false") << "\n# worst_fidelity=" << format_number(worst_fidelity)
        << "\n# worst_weight_deviation=" << format_number(worst_dev) << '\n';
    out << "chain,index,oracle_weight,transfer_prob,weight_deviation,fidelity,passed\n";
    for (std::size_t c = 0; c < reports.size(); ++c) {
      for (const auto& e : reports[c].entries) {
        out << c << ',' << format_outcome(e.indices) << ',' << format_number(e.oracle_weight) << ','
            << format_number(e.transfer_prob) << ',' << format_number(e.weight_deviation) << ','
            << format_number(e.fidelity) << ',' << (e.passed ? "true" : "false") << '\n';
      }
    }
  } else {
    ojson j = header(config);
    j["tolerance"] = config.tolerance;
    j["passed"] = all_passed;
    j["worst_fidelity"] = worst_fidelity;
    j["worst_weight_deviation"] = worst_dev;
    ojson chains = ojson::array();
    for (std::size_t c = 0; c < reports.size(); ++c) {
      ojson cj;
      cj["n_bonds"] = suite[c].size();
      cj["normalized_filters"] = filters_json(suite[c]);
      cj["passed"] = reports[c].passed;
      cj["worst_fidelity"] = reports[c].worst_fidelity;
      cj["worst_weight_deviation"] = reports[c].worst_weight_deviation;
      ojson entries = ojson::array();
      for (const auto& e : reports[c].entries) {
        ojson ej;
        ej["index"] = format_outcome(e.indices);
        ej["oracle_weight"] = e.oracle_weight;
        ej["transfer_prob"] = e.transfer_prob;
        ej["weight_deviation"] = e.weight_deviation;
        ej["fidelity"] = e.fidelity;
        ej["passed"] = e.passed;
        entries.push_back(std::move(ej));
      }
      cj["outcomes"] = std::move(entries);
      chains.push_back(std::move(cj));
    }
    j["chains"] = std::move(chains);
    out << j.dump(2) << '\n';
  }
  return all_passed ? kExitOk : kExitVerificationFailed;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement swapping along filtered valence-bond chains", "vbsswap"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string mode;
  std::string format;
  std::string identical;
  std::string filters;
  std::string config_path;
  std::string out_path;
  std::size_t dim = 2;
  std::size_t bonds = 2;
  std::uint64_t seed = 42;
  std::uint64_t samples = 100000;
  double tolerance = 1e-9;
  std::size_t n_min = 1;
  std::size_t n_max = 8;
  std::size_t chains = 20;
  std::size_t max_nodes = 4;
  bool corrupt = false;

  struct Bound {
    CLI::App* sub;
    std::vector<CLI::Option*> opts;
  };
  std::vector<Bound> subs;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"swap", "Enumerate every measurement outcome and its trade-off product"},
      {"scan", "Trade-off constant versus chain length for identical filters"},
      {"sample", "Simulate sequential Bell measurements and compare with exact probabilities"},
      {"verify", "Cross-check the transfer formulas against the brute-force VBS state"},
  };
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    Bound b{sub, {}};
    b.opts.push_back(sub->add_option("--mode", mode, "plain | vbs | qudit"));
    b.opts.push_back(sub->add_option("--dim", dim, "Local dimension D"));
    b.opts.push_back(sub->add_option("--identical", identical, "Same diagonal on every bond, e.g. 2,1"));
    b.opts.push_back(sub->add_option("--filters", filters, "Per-bond diagonals, e.g. \"2,1;1,1\""));
    b.opts.push_back(sub->add_option("--bonds", bonds, "Number of bonds N+1 (with --identical)"));
    b.opts.push_back(sub->add_option("--seed", seed, "Seed for every random choice"));
    b.opts.push_back(sub->add_option("--samples", samples, "Number of sampled measurement runs"));
    b.opts.push_back(sub->add_option("--tolerance", tolerance, "Oracle agreement tolerance"));
    b.opts.push_back(sub->add_option("--format", format, "json | csv"));
    b.opts.push_back(sub->add_option("--n-min", n_min, "Smallest N for scan"));
    b.opts.push_back(sub->add_option("--n-max", n_max, "Largest N for scan"));
    b.opts.push_back(sub->add_option("--chains", chains, "Random chains in the verify suite"));
    b.opts.push_back(sub->add_option("--max-nodes", max_nodes, "Largest N in the verify suite"));
    b.opts.push_back(sub->add_option("--config", config_path, "JSON config file; flags override it"));
    b.opts.push_back(sub->add_option("--out", out_path, "Write the report here instead of stdout"));
    b.opts.push_back(sub->add_flag("--debug-corrupt-bell-order", corrupt)->group(""));
    subs.push_back(std::move(b));
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Bound* active = nullptr;
  for (const auto& b : subs) {
    if (b.sub->parsed()) active = &b;
  }
  auto given = [&](const std::string& name) { return active->sub->get_option(name)->count() > 0; };

  try {
    RunConfig config;
    config.command = active->sub->get_name();
    if (given("--config")) {
      std::ifstream in(config_path);
      if (!in) throw UsageError("cannot read config file '" + config_path + "'");
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("config file is not valid JSON: ") + e.what());
      }
      apply_json(config, j);
    }
    if (given("--identical") && given("--filters")) throw UsageError("give either --identical or --filters");
    if (given("--mode")) config.mode = parse_mode(mode);
    if (given("--dim")) config.dim = dim;
    if (given("--identical")) {
      config.identical = parse_diag_list(identical);
      config.filters.clear();
    }
    if (given("--filters")) {
      config.filters = parse_filter_list(filters);
      config.identical.clear();
    }
    if (given("--bonds")) config.bonds = bonds;
    if (given("--seed")) config.seed = seed;
    if (given("--samples")) config.samples = samples;
    if (given("--tolerance")) config.tolerance = tolerance;
    if (given("--format")) config.format = parse_format(format);
    if (given("--n-min")) config.n_min = n_min;
    if (given("--n-max")) config.n_max = n_max;
    if (given("--chains")) config.chains = chains;
    if (given("--max-nodes")) config.max_nodes = max_nodes;
    if (given("--out")) config.out = out_path;
    config.corrupt_bell_order = corrupt;

    std::ostringstream buffer;
    int code = kExitOk;
    if (config.command == "swap") code = cmd_swap(config, buffer);
    if (config.command == "scan") code = cmd_scan(config, buffer);
    if (config.command == "sample") code = cmd_sample(config, buffer);
    if (config.command == "verify") code = cmd_verify(config, buffer);

    if (config.out) {
      std::ofstream file(*config.out, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + *config.out + "'");
      file << buffer.str();
    } else {
      out << buffer.str();
    }
    return code;
  } catch (const UsageError& e) {
    err << "vbsswap: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "vbsswap: " << e.what() << '\n';
    return kExitBudget;
  }
}

}  // namespace vbsswap::cli
