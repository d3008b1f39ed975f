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

#include "seqtf/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "seqtf/data/ingest.hpp"
#include "seqtf/data/serialization.hpp"
#include "seqtf/data/split.hpp"
#include "seqtf/error.hpp"
#include "seqtf/eval/grid_search.hpp"
#include "seqtf/models/factory.hpp"
#include "seqtf/models/model_io.hpp"

namespace seqtf::cli {
namespace {

using nlohmann::json;

models::TrainOptions train_options(const ExperimentConfig& config) {
  models::TrainOptions options;
  options.operators.deterministic = config.deterministic;
  return options;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  require(out.is_open(), ErrorKind::kIo, "cannot write " + path.string());
  out << text;
  require(out.good(), ErrorKind::kIo, "write failed for " + path.string());
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.is_open(), ErrorKind::kMissingArtifact, "missing artifact " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, path.string() + ": " + e.what());
  }
}

std::vector<json> read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.is_open(), ErrorKind::kMissingArtifact, "missing artifact " + path.string());
  std::vector<json> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      records.push_back(json::parse(line));
    } catch (const json::exception& e) {
      throw Error(ErrorKind::kParse, path.string() + ": " + e.what());
    }
  }
  return records;
}

void require_models(const ExperimentConfig& config) {
  require(!config.models.empty(), ErrorKind::kConfig, "config lists no models");
}

}  // namespace

std::filesystem::path split_path(const ExperimentConfig& c) { return c.output / "split.tsv"; }
std::filesystem::path stats_path(const ExperimentConfig& c) { return c.output / "stats.json"; }
std::filesystem::path model_dir(const ExperimentConfig& c, const ModelSpec& s) {
  return c.output / s.name;
}
std::filesystem::path final_report_path(const ExperimentConfig& c) {
  return c.output / "final_report.jsonl";
}

DatasetStats dataset_stats(const data::InteractionLog& log) {
  DatasetStats stats;
  stats.users = log.num_users();
  stats.items = log.num_items();
  stats.interactions = log.size();
  if (stats.users == 0) return stats;
  std::vector<std::size_t> lengths;
  for (std::size_t u = 0; u < stats.users; ++u) {
    lengths.push_back(log.user_history(static_cast<std::int32_t>(u)).size());
  }
  std::sort(lengths.begin(), lengths.end());
  stats.mean_history = static_cast<double>(stats.interactions) / static_cast<double>(stats.users);
  const std::size_t mid = lengths.size() / 2;
  stats.median_history = lengths.size() % 2 == 1
                             ? static_cast<double>(lengths[mid])
                             : 0.5 * static_cast<double>(lengths[mid - 1] + lengths[mid]);
  stats.density = static_cast<double>(stats.interactions) /
                  (static_cast<double>(stats.users) * static_cast<double>(stats.items));
  return stats;
}

json report_record(const std::string& model, const models::ModelConfig& config,
                   const std::string& split, const eval::EvaluationReport& report,
                   int sweep_count, double wall_time) {
  return {
      {"model", model},
      {"config", models::config_to_json(config)},
      {"split", split},
      {"cutoff", report.cutoff},
      {"hr", report.hr.mean},
      {"ndcg", report.ndcg.mean},
      {"cov", report.cov},
      {"errors", {{"hr", report.hr.standard_error}, {"ndcg", report.ndcg.standard_error}}},
      {"evaluated", report.evaluated_count},
      {"skipped_cold", report.skipped_cold_count},
      {"sweep_count", sweep_count},
      {"wall_time", wall_time},
  };
}

json cmd_prepare(const ExperimentConfig& config) {
  require(!config.dataset.path.empty(), ErrorKind::kConfig, "dataset.path is required");
  const data::InteractionLog raw = data::ingest_file(config.dataset.path, config.dataset.format);
  const data::InteractionLog log = data::core_filter(raw, config.dataset.core);

  std::int64_t t_valid = 0;
  std::int64_t t_test = 0;
  if (config.split.t_valid && config.split.t_test) {
    t_valid = *config.split.t_valid;
    t_test = *config.split.t_test;
  } else {
    require(config.split.valid_count >= 1 && config.split.test_count >= 1, ErrorKind::kConfig,
            "split boundaries or counts are required");
    std::tie(t_valid, t_test) =
        data::boundaries_for_counts(log, config.split.valid_count, config.split.test_count);
  }
  const data::TimeSplit split = data::timepoint_split(log, t_valid, t_test);

  std::filesystem::create_directories(config.output);
  data::save_split(split_path(config), split);

  const auto as_json = [](const DatasetStats& s) {
    return json{{"users", s.users},
                {"items", s.items},
                {"interactions", s.interactions},
                {"mean_history", s.mean_history},
                {"median_history", s.median_history},
                {"density", s.density}};
  };
  const json stats = {
      {"source", config.dataset.path.string()},
      {"raw_interactions", raw.size()},
      {"core", config.dataset.core},
      {"max_length", config.max_length},
      {"dataset", as_json(dataset_stats(log))},
      {"t_valid", t_valid},
      {"t_test", t_test},
      {"train", as_json(dataset_stats(split.train))},
      {"validation", as_json(dataset_stats(split.validation))},
      {"test", as_json(dataset_stats(split.test))},
  };
  write_text(stats_path(config), stats.dump(2) + "\n");
  return stats;
}

std::vector<json> cmd_tune(const ExperimentConfig& config) {
  require_models(config);
  const data::TimeSplit split = data::load_split(split_path(config));
  eval::GridOptions options;
  options.cutoff = config.cutoff;
  options.stopping = config.stopping;
  options.training = train_options(config);
  options.threads = config.threads;

  std::vector<json> tuned;
  for (const ModelSpec& spec : config.models) {
    const auto result =
        eval::grid_search(spec.space, split.train, split.validation, config.seed, options);
    const auto dir = model_dir(config, spec);
    std::filesystem::create_directories(dir);
    std::string lines;
    for (const eval::GridPoint& p : result.log) {
      json record = report_record(spec.name, p.config, "validation", p.report, p.sweep_count,
                                  p.wall_time);
      record["point"] = p.index;
      record["metric_history"] = p.metric_history;
      lines += record.dump() + "\n";
    }
    write_text(dir / "grid_log.jsonl", lines);

    const eval::GridPoint& best = result.log[result.best];
    json record = report_record(spec.name, best.config, "validation", best.report,
                                best.sweep_count, 0.0);
    record.erase("wall_time");
    record["point"] = best.index;
    record["points_evaluated"] = result.log.size();
    write_text(dir / "tuned.json", record.dump(2) + "\n");
    models::save_model(dir / "tuned_model.bin", *result.best_model, best.sweep_count);
    tuned.push_back(std::move(record));
  }
  return tuned;
}

std::vector<json> cmd_final(const ExperimentConfig& config) {
  require_models(config);
  const data::TimeSplit split = data::load_split(split_path(config));
  // Fail before any training if an artifact is missing.
  std::vector<models::StoredModel> tuned;
  for (const ModelSpec& spec : config.models) {
    tuned.push_back(models::load_model(model_dir(config, spec) / "tuned_model.bin"));
  }
  const data::InteractionLog merged = data::merge_logs(split.train, split.validation);

  std::vector<json> records;
  std::string lines;
  for (std::size_t m = 0; m < config.models.size(); ++m) {
    const ModelSpec& spec = config.models[m];
    const auto start = std::chrono::steady_clock::now();
    const models::ModelConfig& hyper = tuned[m].model->config();
    const auto model =
        models::train_model(hyper, merged, tuned[m].sweep_count, train_options(config));
    const auto report = eval::evaluate(*model, merged, split.test, config.cutoff);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    models::save_model(model_dir(config, spec) / "final_model.bin", *model, tuned[m].sweep_count);
    json record = report_record(spec.name, hyper, "test", report, tuned[m].sweep_count, wall);
    lines += record.dump() + "\n";
    records.push_back(std::move(record));
  }
  write_text(final_report_path(config), lines);
  return records;
}

void cmd_report(const ExperimentConfig& config, std::ostream& out) {
  require_models(config);
  const auto row = [&](const json& r) {
    char buffer[256];
    std::snprintf(buffer, sizeof(buffer), "%-16s %-10s %8.4f ± %.4f  %8.4f ± %.4f  %7.4f  %6d\n",
                  r.at("model").get<std::string>().c_str(), r.at("split").get<std::string>().c_str(),
                  r.at("hr").get<double>(), r.at("errors").at("hr").get<double>(),
                  r.at("ndcg").get<double>(), r.at("errors").at("ndcg").get<double>(),
                  r.at("cov").get<double>(), r.at("sweep_count").get<int>());
    out << buffer;
  };
  const std::size_t cutoff = config.cutoff;
  out << "model            split          HR@" << cutoff << "              NDCG@" << cutoff
      << "            COV  sweeps\n";
  for (const ModelSpec& spec : config.models) {
    const auto path = model_dir(config, spec) / "tuned.json";
    if (std::filesystem::exists(path)) row(read_json(path));
  }
  const auto final_path = final_report_path(config);
  if (std::filesystem::exists(final_path)) {
    for (const json& r : read_jsonl(final_path)) row(r);
  }
}

}  // namespace seqtf::cli
