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
#include <memory>

#include <json.hpp>

#include "seqtf/models/recommender.hpp"

namespace seqtf::models {

nlohmann::json config_to_json(const ModelConfig& config);
ModelConfig config_from_json(const nlohmann::json& json);

struct StoredModel {
  std::unique_ptr<Recommender> model;
  int sweep_count = 0;
};

// Container layout: the 8-byte magic "SEQTFMDL", a little-endian uint32
// format version, a uint64 header length, the JSON header (kind,
// hyperparameters, catalog, matrix directory), then every matrix as
// row-major little-endian doubles. Factor matrices must be orthonormal.
void write_model(std::ostream& out, const Recommender& model, int sweep_count);
StoredModel read_model(std::istream& in);
void save_model(const std::filesystem::path& path, const Recommender& model, int sweep_count);
StoredModel load_model(const std::filesystem::path& path);

}  // namespace seqtf::models
