// Copyright 2026 The smcsa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// smcsa command-line tool: gendata, fit, bench, oracle.

#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

constexpr const char* kThreadsEnv = "SMCSA_THREADS";

// --threads wins, then SMCSA_THREADS, then a single thread.
unsigned resolve_threads(const CLI::Option* flag, unsigned flag_value) {
  if (flag->count() > 0) return flag_value;
  if (const char* env = std::getenv(kThreadsEnv); env && *env) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0') throw CLI::ValidationError(std::string(kThreadsEnv) + " is not a non-negative integer");
    return static_cast<unsigned>(v);
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace smcsa::cli;
  CLI::App app{"Sequential Monte Carlo simulated annealing for shape-constrained regression"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SMCSA_VERSION);

  CommonOptions options;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::string name;
  std::string algorithm;

  const auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* cfg = sub->add_option("--config", options.config, "JSON run configuration");
    if (needs_config) cfg->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "master seed (overrides the config)");
    sub->add_option("--out", options.out, "output path (stdout when absent)");
    sub->add_option("--threads", threads, "worker threads, 0 for all cores (default $SMCSA_THREADS or 1)");
    sub->add_flag("--quiet", options.quiet, "no progress output");
  };

  auto* gendata = app.add_subcommand("gendata", "write a built-in dataset as CSV");
  add_common(gendata, false);
  gendata->add_option("--name", name, "ht0, ht1 or lidar_surrogate")
      ->required()
      ->check(CLI::IsMember({"ht0", "ht1", "lidar_surrogate"}));

  auto* fit = app.add_subcommand("fit", "run one replication and write a JSON report");
  add_common(fit, true);
  fit->add_option("--algorithm", algorithm, "label of the configured algorithm to run (default: first)");

  auto* bench = app.add_subcommand("bench", "run every algorithm for every replication and summarize");
  add_common(bench, true);

  auto* oracle = app.add_subcommand("oracle", "exact monotone B-spline least squares by active-set enumeration");
  add_common(oracle, true);

  try {
    app.parse(argc, argv);
    CLI::App* sub = app.get_subcommands().front();
    options.threads = resolve_threads(sub->get_option("--threads"), threads);
    if (sub->get_option("--seed")->count() > 0) options.seed = seed;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gendata) return cmd_gendata(name, options);
    if (*fit) return cmd_fit(options, algorithm);
    if (*bench) return cmd_bench(options);
    return cmd_oracle(options);
  } catch (const std::exception& e) {
    return report_failure(e);
  }
}
