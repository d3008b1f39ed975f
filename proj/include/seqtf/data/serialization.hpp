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
#include <istream>
#include <ostream>

#include "seqtf/data/interaction_log.hpp"
#include "seqtf/data/positional_tensor.hpp"
#include "seqtf/data/split.hpp"

namespace seqtf::data {

// Tab-separated text with a "#seqtf-split <version>" header line followed by
// one "[part]" section per split part. External ids must not contain tabs or
// newlines.
void write_split(std::ostream& out, const TimeSplit& split);
TimeSplit read_split(std::istream& in);
void save_split(const std::filesystem::path& path, const TimeSplit& split);
TimeSplit load_split(const std::filesystem::path& path);

// "user item position" per line, 0-based integers.
void dump_coo(std::ostream& out, const SparsePositionalTensor& tensor);

}  // namespace seqtf::data
