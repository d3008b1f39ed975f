// Copyright 2026 The seqtf Authors.
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

// Command-line front end: prepare, tune, final and report.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "seqtf/cli/commands.hpp"
#include "seqtf/cli/config.hpp"
#include "seqtf/error.hpp"

namespace {

// Exit codes by error category; 2 is reserved for usage errors.
int exit_code(seqtf::ErrorKind kind) {
  switch (kind) {
    case seqtf::ErrorKind::kConfig:
    case seqtf::ErrorKind::kInvalidArgument: return 3;
    case seqtf::ErrorKind::kIo:
    case seqtf::ErrorKind::kMissingArtifact: return 4;
    case seqtf::ErrorKind::kParse:
    case seqtf::ErrorKind::kData: return 5;
    case seqtf::ErrorKind::kNumeric:
    case seqtf::ErrorKind::kConvergence: return 6;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequence-aware tensor factorization recommender experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output;
  std::optional<std::string> preset;
  std::optional<std::size_t> threads;
  bool deterministic = false;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Experiment config (JSON)")->required()->check(
        CLI::ExistingFile);
    sub->add_option("--seed", seed, "Random seed (overrides the config)");
    sub->add_option("--output", output, "Output directory (overrides the config)");
    sub->add_option("--preset", preset, "Dataset preset")
        ->check(CLI::IsMember(seqtf::cli::preset_names()));
    sub->add_option("--threads", threads, "Worker threads for grid points")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--deterministic", deterministic, "Bit-reproducible reductions");
  };
  CLI::App* prepare = app.add_subcommand("prepare", "Ingest, filter and split a dataset");
  CLI::App* tune = app.add_subcommand("tune", "Grid search on the validation split");
  CLI::App* final_run = app.add_subcommand("final", "Retrain tuned models and evaluate on test");
  CLI::App* report = app.add_subcommand("report", "Print tuned and final metrics");
  for (CLI::App* sub : {prepare, tune, final_run, report}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; every usage error exits 2.
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    seqtf::cli::Overrides overrides;
    overrides.seed = seed;
    if (output) overrides.output = *output;
    overrides.preset = preset;
    overrides.threads = threads;
    overrides.deterministic = deterministic;
    const auto config = seqtf::cli::load_config(config_path, overrides);

    if (prepare->parsed()) {
      const auto stats = seqtf::cli::cmd_prepare(config);
      std::cout << stats.dump(2) << "\n";
    } else if (tune->parsed()) {
      for (const auto& record : seqtf::cli::cmd_tune(config)) std::cout << record.dump() << "\n";
    } else if (final_run->parsed()) {
      for (const auto& record : seqtf::cli::cmd_final(config)) std::cout << record.dump() << "\n";
    } else if (report->parsed()) {
      seqtf::cli::cmd_report(config, std::cout);
    }
  } catch (const seqtf::Error& e) {
    std::cerr << "error [" << seqtf::error_kind_name(e.kind()) << "]: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error [internal]: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
