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
#include <filesystem>
#include <istream>
#include <string>

#include "seqtf/data/interaction_log.hpp"

namespace seqtf::data {

// Column layout of a delimited interaction file. With a header row the
// columns are looked up by name; without one the positional indices apply.
// Any other columns (ratings, for example) are ignored.
struct CsvFormat {
  std::string delimiter = ",";
  bool has_header = true;
  std::string user_column = "user";
  std::string item_column = "item";
  std::string timestamp_column = "timestamp";
  std::size_t user_index = 0;
  std::size_t item_index = 1;
  std::size_t timestamp_index = 2;
};

InteractionLog ingest_log(std::istream& source, const CsvFormat& format);

// Reads plain or gzip-compressed files.
InteractionLog ingest_file(const std::filesystem::path& path, const CsvFormat& format);

// Repeatedly drops users and items with fewer than `k` interactions until
// none remain. Throws when nothing survives.
InteractionLog core_filter(const InteractionLog& log, std::size_t k);

}  // namespace seqtf::data
