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

#include "seqtf/data/ingest.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <memory>
#include <sstream>
#include <string_view>

#include "seqtf/error.hpp"

namespace seqtf::data {
namespace {

std::vector<std::string_view> split_fields(std::string_view line, std::string_view delimiter) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(delimiter, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + delimiter.size();
  }
  return fields;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '"')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '"' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": " + what);
}

std::size_t column_position(const std::vector<std::string_view>& header, const std::string& name) {
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (trim(header[c]) == name) return c;
  }
  throw Error(ErrorKind::kParse, "line 1: missing column '" + name + "' in header");
}

}  // namespace

InteractionLog ingest_log(std::istream& source, const CsvFormat& format) {
  require(!format.delimiter.empty(), ErrorKind::kInvalidArgument, "empty delimiter");

  std::vector<RawInteraction> rows;
  std::size_t user_col = format.user_index;
  std::size_t item_col = format.item_index;
  std::size_t time_col = format.timestamp_index;
  std::size_t expected_columns = 0;
  bool header_pending = format.has_header;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (trim(view).empty()) continue;
    auto fields = split_fields(view, format.delimiter);

    if (header_pending) {
      user_col = column_position(fields, format.user_column);
      item_col = column_position(fields, format.item_column);
      time_col = column_position(fields, format.timestamp_column);
      expected_columns = fields.size();
      header_pending = false;
      continue;
    }
    if (expected_columns == 0) {
      expected_columns = fields.size();
      const std::size_t needed = std::max({user_col, item_col, time_col}) + 1;
      if (expected_columns < needed) {
        parse_error(line_no, "expected at least " + std::to_string(needed) + " columns, got " +
                                 std::to_string(fields.size()));
      }
    }
    if (fields.size() != expected_columns) {
      parse_error(line_no, "expected " + std::to_string(expected_columns) + " columns, got " +
                               std::to_string(fields.size()));
    }

    std::string_view ts_text = trim(fields[time_col]);
    std::int64_t timestamp = 0;
    auto [ptr, ec] = std::from_chars(ts_text.data(), ts_text.data() + ts_text.size(), timestamp);
    if (ec != std::errc() || ptr != ts_text.data() + ts_text.size() || ts_text.empty()) {
      parse_error(line_no, "unparsable timestamp '" + std::string(ts_text) + "'");
    }
    if (timestamp < 0) parse_error(line_no, "negative timestamp");
    std::string_view user = trim(fields[user_col]);
    std::string_view item = trim(fields[item_col]);
    if (user.empty() || item.empty()) parse_error(line_no, "empty user or item id");
    rows.push_back({std::string(user), std::string(item), timestamp});
  }
  require(!rows.empty(), ErrorKind::kParse, "source contains no interactions");
  return InteractionLog::from_raw(rows);
}

InteractionLog ingest_file(const std::filesystem::path& path, const CsvFormat& format) {
  require(std::filesystem::exists(path), ErrorKind::kIo, "file not found: " + path.string());
  // gzread passes uncompressed files through unchanged.
  std::unique_ptr<gzFile_s, int (*)(gzFile)> file(gzopen(path.c_str(), "rb"), gzclose);
  require(file != nullptr, ErrorKind::kIo, "cannot open " + path.string());
  std::string contents;
  char buffer[1 << 16];
  int got = 0;
  while ((got = gzread(file.get(), buffer, sizeof(buffer))) > 0) {
    contents.append(buffer, static_cast<std::size_t>(got));
  }
  require(got == 0, ErrorKind::kIo, "read error in " + path.string());
  std::istringstream stream(std::move(contents));
  try {
    return ingest_log(stream, format);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

InteractionLog core_filter(const InteractionLog& log, std::size_t k) {
  require(k >= 1, ErrorKind::kInvalidArgument, "core size must be at least 1");
  std::vector<Interaction> alive = log.interactions();
  while (true) {
    std::vector<std::size_t> user_count(log.num_users(), 0);
    std::vector<std::size_t> item_count(log.num_items(), 0);
    for (const Interaction& x : alive) {
      ++user_count[x.user];
      ++item_count[x.item];
    }
    const std::size_t before = alive.size();
    std::erase_if(alive, [&](const Interaction& x) {
      return user_count[x.user] < k || item_count[x.item] < k;
    });
    if (alive.size() == before) break;
  }
  require(!alive.empty(), ErrorKind::kData, "k-core empty");
  if (alive.size() == log.size()) return log;

  std::vector<RawInteraction> rows;
  rows.reserve(alive.size());
  for (const Interaction& x : alive) {
    rows.push_back({log.user_id(x.user), log.item_id(x.item), x.timestamp});
  }
  return InteractionLog::from_raw(rows);
}

}  // namespace seqtf::data
