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

#include "seqtf/data/serialization.hpp"

#include <charconv>
#include <fstream>
#include <string>

#include "seqtf/error.hpp"

namespace seqtf::data {
namespace {

constexpr std::string_view kSplitMagic = "#seqtf-split";
constexpr int kSplitVersion = 1;

void write_part(std::ostream& out, std::string_view name, const InteractionLog& log) {
  out << '[' << name << "]\n";
  for (const RawInteraction& row : log.to_raw()) {
    out << row.user << '\t' << row.item << '\t' << row.timestamp << '\n';
  }
}

std::int64_t parse_int(std::string_view text, std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::kParse, "split file line " + std::to_string(line_no) +
                                       ": bad integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

void write_split(std::ostream& out, const TimeSplit& split) {
  out << kSplitMagic << ' ' << kSplitVersion << '\n';
  out << "t_valid\t" << split.t_valid << '\n';
  out << "t_test\t" << split.t_test << '\n';
  write_part(out, "train", split.train);
  write_part(out, "validation", split.validation);
  write_part(out, "test", split.test);
}

TimeSplit read_split(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  require(static_cast<bool>(std::getline(in, line)) && line.starts_with(kSplitMagic),
          ErrorKind::kParse, "not a split file (missing header)");
  const auto version = parse_int(std::string_view(line).substr(kSplitMagic.size() + 1), line_no);
  require(version == kSplitVersion, ErrorKind::kParse,
          "unsupported split file version " + std::to_string(version));

  TimeSplit split;
  std::vector<RawInteraction> parts[3];
  int current = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line == "[train]") { current = 0; continue; }
    if (line == "[validation]") { current = 1; continue; }
    if (line == "[test]") { current = 2; continue; }
    const auto tab = line.find('\t');
    require(tab != std::string::npos, ErrorKind::kParse,
            "split file line " + std::to_string(line_no) + ": malformed");
    std::string_view view(line);
    if (current < 0) {
      const auto key = view.substr(0, tab);
      const auto value = parse_int(view.substr(tab + 1), line_no);
      if (key == "t_valid") split.t_valid = value;
      else if (key == "t_test") split.t_test = value;
      continue;
    }
    const auto tab2 = line.find('\t', tab + 1);
    require(tab2 != std::string::npos, ErrorKind::kParse,
            "split file line " + std::to_string(line_no) + ": expected 3 fields");
    parts[current].push_back({std::string(view.substr(0, tab)),
                              std::string(view.substr(tab + 1, tab2 - tab - 1)),
                              parse_int(view.substr(tab2 + 1), line_no)});
  }
  split.train = InteractionLog::from_raw(parts[0]);
  split.validation = InteractionLog::from_raw(parts[1]);
  split.test = InteractionLog::from_raw(parts[2]);
  return split;
}

void save_split(const std::filesystem::path& path, const TimeSplit& split) {
  std::ofstream out(path);
  require(out.good(), ErrorKind::kIo, "cannot write " + path.string());
  write_split(out, split);
  require(out.good(), ErrorKind::kIo, "write failed for " + path.string());
}

TimeSplit load_split(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::kMissingArtifact, "missing split file " + path.string());
  return read_split(in);
}

void dump_coo(std::ostream& out, const SparsePositionalTensor& tensor) {
  for (const PositionalEntry& e : tensor.entries()) {
    out << e.user << ' ' << e.item << ' ' << e.position << '\n';
  }
}

}  // namespace seqtf::data
