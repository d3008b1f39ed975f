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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqtf/cli/config.hpp"
#include "seqtf/eval/evaluate.hpp"

namespace seqtf::cli {

// Artifact locations under the output directory.
std::filesystem::path split_path(const ExperimentConfig& config);
std::filesystem::path stats_path(const ExperimentConfig& config);
std::filesystem::path model_dir(const ExperimentConfig& config, const ModelSpec& spec);
std::filesystem::path final_report_path(const ExperimentConfig& config);

struct DatasetStats {
  std::size_t users = 0;
  std::size_t items = 0;
  std::size_t interactions = 0;
  double mean_history = 0.0;
  double median_history = 0.0;
  double density = 0.0;  // interactions / (users * items)
};

DatasetStats dataset_stats(const data::InteractionLog& log);

// Ingests, filters and splits the dataset; writes split.tsv and stats.json.
nlohmann::json cmd_prepare(const ExperimentConfig& config);

// Grid search per model on train/validation; writes grid_log.jsonl,
// tuned.json and tuned_model.bin per model. Returns the tuned records.
std::vector<nlohmann::json> cmd_tune(const ExperimentConfig& config);

// Retrains each tuned model on train + validation with its stored sweep
// count, evaluates on test, and writes final_model.bin and
// final_report.jsonl. Returns the report records.
std::vector<nlohmann::json> cmd_final(const ExperimentConfig& config);

// Human-readable summary of the tuned and final records found on disk.
void cmd_report(const ExperimentConfig& config, std::ostream& out);

// Line-delimited record of one evaluation.
nlohmann::json report_record(const std::string& model, const models::ModelConfig& config,
                             const std::string& split, const eval::EvaluationReport& report,
                             int sweep_count, double wall_time);

}  // namespace seqtf::cli
