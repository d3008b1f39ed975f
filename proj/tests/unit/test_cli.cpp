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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "seqtf/cli/commands.hpp"
#include "seqtf/cli/config.hpp"
#include "seqtf/error.hpp"
#include "synthetic.hpp"

namespace seqtf::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("seqtf-cli-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<json> read_lines(const fs::path& path) {
  std::vector<json> records;
  std::ifstream in(path);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) records.push_back(json::parse(line));
  }
  return records;
}

// Three users, four items, ten rows; boundaries 7 and 9 leave seven train,
// one validation and two test rows.
void write_toy_csv(const fs::path& path) {
  std::ofstream out(path);
  out << "user,item,timestamp\n"
      << "u1,a,1\nu1,b,2\nu1,c,3\n"
      << "u2,a,2\nu2,c,4\nu2,b,9\n"
      << "u3,b,3\nu3,d,5\nu3,a,7\nu3,c,10\n";
}

json toy_config() {
  return {{"seed", 5},
          {"output", "out"},
          {"max_length", 4},
          {"cutoff", 2},
          {"dataset", {{"path", "toy.csv"}, {"core", 1}}},
          {"split", {{"t_valid", 7}, {"t_test", 9}}}};
}

// Walks over a deterministic successor cycle; each step is later than the
// previous one so the tail of every walk lands in validation and test.
void write_markov_csv(const fs::path& path, std::size_t items, std::size_t users, std::uint64_t seed) {
  const auto catalog = testing::markov_catalog(items, users, 6, 12, seed);
  std::ofstream out(path);
  out << "user,item,timestamp\n";
  for (std::size_t u = 0; u < catalog.sequences.size(); ++u) {
    const auto& seq = catalog.sequences[u];
    for (std::size_t p = 0; p < seq.size(); ++p) {
      out << "u" << u << ',' << seq[p] << ',' << 1000 * (p + 12 - seq.size()) + u << '\n';
    }
  }
}

TEST(Prepare, ToyCsvStats) {
  const auto dir = scratch("prepare");
  write_toy_csv(dir / "toy.csv");
  const auto config = parse_config(toy_config(), {}, dir);
  const json stats = cmd_prepare(config);
  EXPECT_EQ(stats["dataset"]["users"], 3);
  EXPECT_EQ(stats["dataset"]["items"], 4);
  EXPECT_EQ(stats["dataset"]["interactions"], 10);
  EXPECT_DOUBLE_EQ(stats["dataset"]["density"].get<double>(), 10.0 / 12.0);
  EXPECT_EQ(stats["train"]["interactions"], 7);
  EXPECT_EQ(stats["validation"]["interactions"], 1);
  EXPECT_EQ(stats["test"]["interactions"], 2);
  EXPECT_TRUE(fs::exists(split_path(config)));
  EXPECT_EQ(json::parse(slurp(stats_path(config))), stats);
}

TEST(Prepare, MissingFileNamesThePath) {
  const auto dir = scratch("missing");
  auto j = toy_config();
  j["dataset"]["path"] = "absent.csv";
  try {
    cmd_prepare(parse_config(j, {}, dir));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
    EXPECT_NE(std::string(e.what()).find("absent.csv"), std::string::npos);
  }
}

TEST(Config, Errors) {
  auto unknown = toy_config();
  unknown["colour"] = "red";
  auto seedless = toy_config();
  seedless.erase("seed");
  auto bad_model = toy_config();
  bad_model["models"] = {{{"kind", "deep-net"}}};
  auto bad_grid = toy_config();
  bad_grid["models"] = {{{"kind", "la-satf"}, {"grid", {{"windows", {0}}}}}};
  for (const auto& j : {unknown, seedless, bad_model, bad_grid}) {
    try {
      parse_config(j);
      ADD_FAILURE() << j.dump();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kConfig) << e.what();
    }
  }
  Overrides overrides;
  overrides.seed = 42;
  EXPECT_EQ(parse_config(seedless, overrides).seed, 42u);
}

TEST(Config, PresetsAndOverrides) {
  auto j = toy_config();
  j.erase("max_length");
  j["preset"] = "ml-1m";
  const auto ml = parse_config(j);
  EXPECT_EQ(ml.max_length, 200u);
  EXPECT_EQ(ml.dataset.format.delimiter, "::");
  j["preset"] = "default";
  EXPECT_EQ(parse_config(j).max_length, 50u);
  Overrides overrides;
  overrides.output = "/tmp/elsewhere";
  overrides.threads = 3;
  overrides.deterministic = true;
  const auto c = parse_config(toy_config(), overrides);
  EXPECT_EQ(c.output, fs::path("/tmp/elsewhere"));
  EXPECT_EQ(c.threads, 3u);
  EXPECT_TRUE(c.deterministic);
}

struct Prepared {
  fs::path dir;
  ExperimentConfig config;
};

Prepared prepare_markov(const std::string& name, const json& models, std::size_t items = 12,
                        std::size_t users = 120) {
  const auto dir = scratch(name);
  write_markov_csv(dir / "log.csv", items, users, 31);
  const json j = {{"seed", 9},
                  {"output", "out"},
                  {"max_length", 8},
                  {"max_sweeps", 4},
                  {"patience", 2},
                  {"dataset", {{"path", "log.csv"}, {"core", 2}}},
                  {"split", {{"valid_count", users}, {"test_count", users}}},
                  {"models", models}};
  auto config = parse_config(j, {}, dir);
  cmd_prepare(config);
  return {dir, std::move(config)};
}

TEST(Tune, PureSvdTwoByTwoGrid) {
  const auto p = prepare_markov("svd-grid", {{{"kind", "puresvd"}, {"grid", {{"svd_ranks", {2, 4}}, {"scalings", {0.2, 1.0}}}}}});
  const auto winners = cmd_tune(p.config);
  ASSERT_EQ(winners.size(), 1u);
  const auto lines = read_lines(model_dir(p.config, p.config.models[0]) / "grid_log.jsonl");
  EXPECT_EQ(lines.size(), 4u);
  std::set<std::pair<int, double>> seen;
  for (const auto& line : lines) {
    seen.insert({line["config"]["rank"].get<int>(), line["config"]["scaling"].get<double>()});
  }
  EXPECT_EQ(seen.size(), 4u);
}

TEST(Tune, LocalWindowExcludesLargeWindowRanks) {
  const auto p = prepare_markov(
      "la-window", {{{"kind", "la-satf"},
                     {"grid", {{"user_ranks", {3}}, {"windows", {5}}, {"window_ranks", {1, 2, 5, 10}}, {"shift_ranks", {1}},
                               {"decays", {0.5}}, {"scalings", {0.6}}, {"regimes", {"plain"}}}}}});
  cmd_tune(p.config);
  std::set<int> window_ranks;
  for (const auto& line : read_lines(model_dir(p.config, p.config.models[0]) / "grid_log.jsonl")) {
    window_ranks.insert(line["config"]["ranks"][2].get<int>());
  }
  EXPECT_EQ(window_ranks, (std::set<int>{1, 2}));
}

TEST(Tune, RerunIsIdentical) {
  const auto p = prepare_markov("rerun", {{{"kind", "mp"}},
                                          {{"kind", "ga-satf"},
                                           {"grid", {{"user_ranks", {3, 5}}, {"window_ranks", {2}}, {"decays", {1.0}},
                                                     {"scalings", {0.6}}, {"regimes", {"plain"}}}}}});
  const auto first = cmd_tune(p.config);
  std::vector<std::string> files;
  for (const auto& spec : p.config.models) {
    files.push_back(slurp(model_dir(p.config, spec) / "tuned.json"));
    files.push_back(slurp(model_dir(p.config, spec) / "tuned_model.bin"));
  }
  const auto second = cmd_tune(p.config);
  for (std::size_t m = 0; m < p.config.models.size(); ++m) {
    EXPECT_EQ(first[m]["config"], second[m]["config"]);
    EXPECT_EQ(files[2 * m], slurp(model_dir(p.config, p.config.models[m]) / "tuned.json"));
    EXPECT_EQ(files[2 * m + 1], slurp(model_dir(p.config, p.config.models[m]) / "tuned_model.bin"));
  }
}

TEST(Final, EndToEndOnToyData) {
  const auto dir = scratch("toy-e2e");
  write_toy_csv(dir / "toy.csv");
  auto j = toy_config();
  j["max_sweeps"] = 2;
  j["models"] = {{{"kind", "mp"}},
                 {{"kind", "puresvd"}, {"grid", {{"svd_ranks", {1}}}}},
                 {{"kind", "ga-satf"}, {"grid", {{"user_ranks", {1}}, {"window_ranks", {1}}, {"decays", {0.0}},
                                                 {"scalings", {1.0}}, {"regimes", {"plain"}}}}},
                 {{"kind", "la-satf"},
                  {"grid", {{"user_ranks", {1}}, {"windows", {2}}, {"window_ranks", {1}}, {"shift_ranks", {1}},
                            {"decays", {0.0}}, {"scalings", {1.0}}, {"regimes", {"plain"}}}}}};
  const auto config = parse_config(j, {}, dir);
  cmd_prepare(config);
  cmd_tune(config);
  const auto records = cmd_final(config);
  ASSERT_EQ(records.size(), 4u);
  for (const auto& r : records) {
    for (const char* field : {"hr", "ndcg", "cov"}) {
      ASSERT_TRUE(r.contains(field)) << field;
      EXPECT_GE(r[field].get<double>(), 0.0);
      EXPECT_LE(r[field].get<double>(), 1.0);
    }
    EXPECT_EQ(r["split"], "test");
  }
  EXPECT_EQ(read_lines(final_report_path(config)).size(), 4u);
  std::ostringstream report;
  cmd_report(config, report);
  EXPECT_NE(report.str().find("la-satf"), std::string::npos);
}

TEST(Final, LocalModelBeatsPopularityOnMarkovWalks) {
  const auto p = prepare_markov(
      "markov-final",
      {{{"kind", "mp"}},
       {{"kind", "la-satf"},
        {"grid", {{"user_ranks", {10, 20}}, {"windows", {2}}, {"window_ranks", {1}}, {"shift_ranks", {2}},
                  {"decays", {0.0}}, {"scalings", {1.0}}, {"regimes", {"plain"}}}}}},
      40, 300);
  cmd_tune(p.config);
  const auto records = cmd_final(p.config);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_GT(records[1]["hr"].get<double>(), records[0]["hr"].get<double>())
      << records[1]["hr"] << " vs " << records[0]["hr"];
}

TEST(Final, DeletedModelIsAMissingArtifact) {
  const auto p = prepare_markov("deleted", {{{"kind", "puresvd"}, {"grid", {{"svd_ranks", {3}}}}}});
  cmd_tune(p.config);
  fs::remove(model_dir(p.config, p.config.models[0]) / "tuned_model.bin");
  fs::remove(model_dir(p.config, p.config.models[0]) / "tuned.json");
  try {
    cmd_final(p.config);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMissingArtifact);
  }
}

int run_cli(const std::string& args) {
  const std::string command = std::string(SEQTF_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Binary, ExitCodes) {
  const auto dir = scratch("binary");
  write_toy_csv(dir / "toy.csv");
  const auto write = [&](const std::string& name, const json& j) {
    std::ofstream(dir / name) << j.dump();
    return (dir / name).string();
  };
  auto bad = toy_config();
  bad["bogus"] = 1;
  auto missing = toy_config();
  missing["dataset"]["path"] = "gone.csv";
  auto seedless = toy_config();
  seedless.erase("seed");
  const auto good = write("good.json", toy_config());
  EXPECT_EQ(run_cli(""), 2);
  EXPECT_EQ(run_cli("prepare --config " + (dir / "nope.json").string()), 2);
  EXPECT_EQ(run_cli("prepare --config " + write("bad.json", bad)), 3);
  EXPECT_EQ(run_cli("prepare --config " + write("seedless.json", seedless)), 3);
  EXPECT_EQ(run_cli("prepare --config " + write("missing.json", missing)), 4);
  EXPECT_EQ(run_cli("prepare --config " + good), 0);
  EXPECT_EQ(run_cli("prepare --seed 3 --config " + write("seeded.json", seedless)), 0);
  EXPECT_EQ(run_cli("--help"), 0);
}

}  // namespace
}  // namespace seqtf::cli
