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

#include "seqtf/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "seqtf/error.hpp"

namespace seqtf::cli {
namespace {

using nlohmann::json;

struct Preset {
  std::size_t max_length;
  data::CsvFormat format;
  std::vector<std::size_t> windows;
  std::vector<std::size_t> positional_ranks;
};

Preset preset_for(const std::string& name) {
  if (name == "default") return {50, data::CsvFormat{}, {1, 2, 5, 10}, {1, 2, 5, 10}};
  if (name == "ml-1m") {
    data::CsvFormat format;
    format.delimiter = "::";
    format.has_header = false;
    format.user_index = 0;
    format.item_index = 1;
    format.timestamp_index = 3;
    return {200, format, {20, 40, 60, 80}, {5, 10, 15, 20}};
  }
  throw Error(ErrorKind::kConfig, "unknown preset '" + name + "'");
}

std::vector<std::size_t> svd_rank_ladder() {
  std::vector<std::size_t> ranks;
  for (std::size_t r = 100; r <= 1000; r += 100) ranks.push_back(r);
  for (std::size_t r = 1250; r <= 2000; r += 250) ranks.push_back(r);
  ranks.push_back(2500);
  ranks.push_back(3000);
  return ranks;
}

std::vector<std::size_t> tensor_rank_ladder() {
  std::vector<std::size_t> ranks;
  for (std::size_t r = 100; r <= 1000; r += 100) ranks.push_back(r);
  return ranks;
}

void reject_unknown(const json& object, const std::set<std::string>& known, const std::string& where) {
  require(object.is_object(), ErrorKind::kConfig, where + " must be an object");
  for (const auto& [key, value] : object.items()) {
    require(known.count(key) > 0, ErrorKind::kConfig, "unknown key '" + key + "' in " + where);
  }
}

template <class T>
void read_list(const json& grid, const char* key, std::vector<T>& out) {
  if (grid.contains(key)) out = grid.at(key).get<std::vector<T>>();
}

eval::GridSpace default_space(const std::string& kind_name, const Preset& preset) {
  eval::GridSpace space;
  space.base.kind = models::parse_model_kind(kind_name);
  space.base.max_length = preset.max_length;
  const std::vector<models::ProjectorRegime> both{models::ProjectorRegime::kPlain,
                                                  models::ProjectorRegime::kRestored};
  switch (space.base.kind) {
    case models::ModelKind::kMostPopular:
      break;
    case models::ModelKind::kPureSvd:
      space.svd_ranks = svd_rank_ladder();
      if (kind_name == "puresvd-n") {
        space.scalings = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
        space.regimes = both;
      }
      break;
    case models::ModelKind::kGaSatf:
    case models::ModelKind::kLaSatf:
      space.user_ranks = tensor_rank_ladder();
      space.window_ranks = preset.positional_ranks;
      if (space.base.kind == models::ModelKind::kLaSatf) {
        space.shift_ranks = preset.positional_ranks;
        space.windows = preset.windows;
      }
      space.decays = {0.0, 0.5, 1.0};
      space.scalings = {0.0, 0.2, 0.4, 0.6};
      space.regimes = both;
      break;
  }
  return space;
}

void validate_space(const ModelSpec& spec, std::size_t max_length) {
  const auto& s = spec.space;
  const std::string where = "model '" + spec.name + "'";
  require(s.budget >= 1, ErrorKind::kConfig, where + ": budget must be at least 1");
  const auto positive = [&](const std::vector<std::size_t>& values, const char* what) {
    for (const std::size_t v : values) {
      require(v >= 1, ErrorKind::kConfig, where + ": " + what + " must be at least 1");
    }
  };
  positive(s.svd_ranks, "ranks");
  positive(s.user_ranks, "user ranks");
  positive(s.item_ranks, "item ranks");
  positive(s.window_ranks, "window ranks");
  positive(s.shift_ranks, "shift ranks");
  for (const std::size_t w : s.windows) {
    require(w >= 1 && w <= max_length, ErrorKind::kConfig,
            where + ": windows must lie in [1, max_length]");
  }
  for (const double f : s.decays) {
    require(std::isfinite(f) && f >= 0.0, ErrorKind::kConfig,
            where + ": decays must be finite and non-negative");
  }
  for (const double v : s.scalings) {
    require(std::isfinite(v), ErrorKind::kConfig, where + ": scalings must be finite");
  }
}

ModelSpec parse_model(const json& j, const Preset& preset, std::uint64_t seed,
                      std::size_t max_length) {
  reject_unknown(j, {"kind", "name", "budget", "attention", "grid"}, "model entry");
  const std::string kind = j.at("kind").get<std::string>();
  ModelSpec spec;
  spec.name = j.value("name", kind);
  require(!spec.name.empty() && spec.name.find('/') == std::string::npos, ErrorKind::kConfig,
          "model name must be a plain directory name");
  Preset effective = preset;
  effective.max_length = max_length;
  spec.space = default_space(kind, effective);
  spec.space.base.seed = seed;
  spec.space.budget = j.value("budget", spec.space.budget);
  const std::string attention = j.value("attention", std::string("power"));
  require(attention == "power" || attention == "identity", ErrorKind::kConfig,
          "attention must be 'power' or 'identity'");
  spec.space.base.attention = attention == "identity" ? attention::AttentionMode::kIdentity
                                                      : attention::AttentionMode::kPowerDecay;
  if (j.contains("grid")) {
    const json& g = j.at("grid");
    reject_unknown(g,
                   {"svd_ranks", "user_ranks", "item_ranks", "window_ranks", "shift_ranks",
                    "windows", "decays", "scalings", "regimes"},
                   "grid of '" + spec.name + "'");
    auto& s = spec.space;
    read_list(g, "svd_ranks", s.svd_ranks);
    read_list(g, "user_ranks", s.user_ranks);
    read_list(g, "item_ranks", s.item_ranks);
    read_list(g, "window_ranks", s.window_ranks);
    read_list(g, "shift_ranks", s.shift_ranks);
    read_list(g, "windows", s.windows);
    read_list(g, "decays", s.decays);
    read_list(g, "scalings", s.scalings);
    if (g.contains("regimes")) {
      s.regimes.clear();
      for (const auto& r : g.at("regimes")) s.regimes.push_back(models::parse_regime(r.get<std::string>()));
    }
  }
  validate_space(spec, max_length);
  return spec;
}

}  // namespace

std::vector<std::string> preset_names() { return {"default", "ml-1m"}; }

ExperimentConfig parse_config(const json& j, const Overrides& overrides,
                              const std::filesystem::path& base_dir) {
  try {
    reject_unknown(j,
                   {"preset", "seed", "output", "max_length", "cutoff", "patience", "max_sweeps",
                    "threads", "deterministic", "dataset", "split", "models"},
                   "config");
    const std::string preset_name = overrides.preset.value_or(j.value("preset", std::string("default")));
    const Preset preset = preset_for(preset_name);

    ExperimentConfig cfg;
    cfg.max_length = j.value("max_length", preset.max_length);
    cfg.dataset.format = preset.format;
    cfg.cutoff = j.value("cutoff", cfg.cutoff);
    cfg.stopping.patience = j.value("patience", cfg.stopping.patience);
    cfg.stopping.max_sweeps = j.value("max_sweeps", cfg.stopping.max_sweeps);
    cfg.threads = overrides.threads.value_or(j.value("threads", cfg.threads));
    cfg.deterministic = overrides.deterministic || j.value("deterministic", false);
    if (overrides.seed) {
      cfg.seed = *overrides.seed;
    } else {
      require(j.contains("seed"), ErrorKind::kConfig, "a seed is required (config key or --seed)");
      cfg.seed = j.at("seed").get<std::uint64_t>();
    }
    if (overrides.output) {
      cfg.output = *overrides.output;
    } else if (j.contains("output")) {
      cfg.output = base_dir / j.at("output").get<std::string>();
    }

    require(cfg.max_length >= 1, ErrorKind::kConfig, "max_length must be at least 1");
    require(cfg.cutoff >= 1, ErrorKind::kConfig, "cutoff must be at least 1");
    require(cfg.stopping.patience >= 1 && cfg.stopping.max_sweeps >= 1, ErrorKind::kConfig,
            "patience and max_sweeps must be at least 1");
    require(cfg.threads >= 1, ErrorKind::kConfig, "threads must be at least 1");

    if (j.contains("dataset")) {
      const json& d = j.at("dataset");
      reject_unknown(d, {"path", "delimiter", "header", "columns", "column_indices", "core"},
                     "dataset");
      if (d.contains("path")) cfg.dataset.path = base_dir / d.at("path").get<std::string>();
      auto& f = cfg.dataset.format;
      f.delimiter = d.value("delimiter", f.delimiter);
      f.has_header = d.value("header", f.has_header);
      if (d.contains("columns")) {
        const json& c = d.at("columns");
        reject_unknown(c, {"user", "item", "timestamp"}, "dataset columns");
        f.user_column = c.value("user", f.user_column);
        f.item_column = c.value("item", f.item_column);
        f.timestamp_column = c.value("timestamp", f.timestamp_column);
      }
      if (d.contains("column_indices")) {
        const auto idx = d.at("column_indices").get<std::vector<std::size_t>>();
        require(idx.size() == 3, ErrorKind::kConfig, "column_indices needs user, item, timestamp");
        f.user_index = idx[0];
        f.item_index = idx[1];
        f.timestamp_index = idx[2];
      }
      require(!f.delimiter.empty(), ErrorKind::kConfig, "delimiter must not be empty");
      cfg.dataset.core = d.value("core", cfg.dataset.core);
      require(cfg.dataset.core >= 1, ErrorKind::kConfig, "core must be at least 1");
    }

    if (j.contains("split")) {
      const json& s = j.at("split");
      reject_unknown(s, {"t_valid", "t_test", "valid_count", "test_count"}, "split");
      if (s.contains("t_valid")) cfg.split.t_valid = s.at("t_valid").get<std::int64_t>();
      if (s.contains("t_test")) cfg.split.t_test = s.at("t_test").get<std::int64_t>();
      cfg.split.valid_count = s.value("valid_count", cfg.split.valid_count);
      cfg.split.test_count = s.value("test_count", cfg.split.test_count);
      const bool explicit_bounds = cfg.split.t_valid.has_value() || cfg.split.t_test.has_value();
      require(!explicit_bounds || (cfg.split.t_valid && cfg.split.t_test), ErrorKind::kConfig,
              "split needs both t_valid and t_test");
      require(explicit_bounds || (cfg.split.valid_count >= 1 && cfg.split.test_count >= 1),
              ErrorKind::kConfig, "split needs boundaries or positive interaction counts");
    }

    if (j.contains("models")) {
      std::set<std::string> names;
      for (const json& m : j.at("models")) {
        cfg.models.push_back(parse_model(m, preset, cfg.seed, cfg.max_length));
        require(names.insert(cfg.models.back().name).second, ErrorKind::kConfig,
                "duplicate model name '" + cfg.models.back().name + "'");
      }
    }
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kConfig, std::string("config: ") + e.what());
  }
}

ExperimentConfig load_config(const std::filesystem::path& path, const Overrides& overrides) {
  std::ifstream in(path);
  require(in.is_open(), ErrorKind::kIo, "cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in, nullptr, true, true);  // comments allowed
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kConfig, path.string() + ": " + e.what());
  }
  try {
    return parse_config(j, overrides, path.parent_path());
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

}  // namespace seqtf::cli
