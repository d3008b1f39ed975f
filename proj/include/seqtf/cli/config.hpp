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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqtf/data/ingest.hpp"
#include "seqtf/eval/early_stopping.hpp"
#include "seqtf/eval/grid_search.hpp"

namespace seqtf::cli {

struct DatasetConfig {
  std::filesystem::path path;
  data::CsvFormat format;
  std::size_t core = 5;
};

// Either explicit boundaries or target interaction counts for the two tail
// parts.
struct SplitConfig {
  std::optional<std::int64_t> t_valid;
  std::optional<std::int64_t> t_test;
  std::size_t valid_count = 0;
  std::size_t test_count = 0;
};

struct ModelSpec {
  std::string name;  // output subdirectory
  eval::GridSpace space;
};

struct ExperimentConfig {
  DatasetConfig dataset;
  SplitConfig split;
  std::size_t max_length = 50;
  std::size_t cutoff = 10;
  std::uint64_t seed = 0;
  std::filesystem::path output = "seqtf-out";
  eval::StoppingOptions stopping;
  std::vector<ModelSpec> models;
  std::size_t threads = 1;
  bool deterministic = false;
};

// Values given on the command line; they win over the file.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> output;
  std::optional<std::string> preset;
  std::optional<std::size_t> threads;
  bool deterministic = false;
};

// Known preset names: "ml-1m" (K=200, "::"-delimited ratings file) and
// "default" (K=50).
std::vector<std::string> preset_names();

// Layering: built-in defaults, then the preset, then the file, then the
// overrides. Relative dataset paths resolve against the config file.
ExperimentConfig parse_config(const nlohmann::json& json, const Overrides& overrides = {},
                              const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path, const Overrides& overrides = {});

}  // namespace seqtf::cli
