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

#include "seqtf/models/model_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <utility>
#include <vector>

#include "seqtf/error.hpp"
#include "seqtf/models/ga_satf.hpp"
#include "seqtf/models/la_satf.hpp"
#include "seqtf/models/most_popular.hpp"
#include "seqtf/models/pure_svd.hpp"

namespace seqtf::models {
namespace {

constexpr char kMagic[8] = {'S', 'E', 'Q', 'T', 'F', 'M', 'D', 'L'};
constexpr std::uint32_t kVersion = 1;
constexpr double kOrthonormalTolerance = 1e-8;

template <class T>
void put_le(std::ostream& out, T value) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <class T>
T get_le(std::istream& in) {
  unsigned char bytes[sizeof(T)];
  in.read(reinterpret_cast<char*>(bytes), sizeof(T));
  require(in.gcount() == static_cast<std::streamsize>(sizeof(T)), ErrorKind::kParse,
          "model file truncated");
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

using NamedMatrix = std::pair<std::string, Eigen::MatrixXd>;

void require_orthonormal(const std::string& name, const Eigen::MatrixXd& f) {
  const Eigen::MatrixXd gram = f.transpose() * f;
  const double err =
      (gram - Eigen::MatrixXd::Identity(f.cols(), f.cols())).cwiseAbs().maxCoeff();
  require(err < kOrthonormalTolerance, ErrorKind::kNumeric,
          "factor '" + name + "' is not column-orthonormal (max deviation " + std::to_string(err) +
              ")");
}

std::vector<NamedMatrix> matrices_of(const Recommender& model) {
  std::vector<NamedMatrix> out;
  switch (model.kind()) {
    case ModelKind::kMostPopular: {
      const auto& counts = dynamic_cast<const MostPopularModel&>(model).counts();
      Eigen::MatrixXd m(static_cast<Eigen::Index>(counts.size()), 1);
      for (std::size_t j = 0; j < counts.size(); ++j) {
        m(static_cast<Eigen::Index>(j), 0) = static_cast<double>(counts[j]);
      }
      out.emplace_back("counts", std::move(m));
      break;
    }
    case ModelKind::kPureSvd: {
      const auto& m = dynamic_cast<const PureSvdModel&>(model);
      out.emplace_back("item_factor", m.item_factor());
      out.emplace_back("scaling", m.scaling().weights);
      break;
    }
    case ModelKind::kGaSatf: {
      const auto& m = dynamic_cast<const GaSatfModel&>(model);
      out.emplace_back("item_factor", m.item_factor());
      out.emplace_back("position_factor", m.position_factor());
      out.emplace_back("scaling", m.scaling().weights);
      break;
    }
    case ModelKind::kLaSatf: {
      const auto& m = dynamic_cast<const LaSatfModel&>(model);
      out.emplace_back("item_factor", m.item_factor());
      out.emplace_back("window_factor", m.window_factor());
      out.emplace_back("shift_factor", m.shift_factor());
      out.emplace_back("scaling", m.scaling().weights);
      break;
    }
  }
  return out;
}

const Eigen::MatrixXd& find_matrix(const std::vector<NamedMatrix>& all, const std::string& name) {
  for (const auto& [n, m] : all) {
    if (n == name) return m;
  }
  throw Error(ErrorKind::kParse, "model file lacks matrix '" + name + "'");
}

std::unique_ptr<Recommender> rebuild(const ModelConfig& config, std::vector<std::string> items,
                                     const std::vector<NamedMatrix>& all) {
  const auto scaling = [&] {
    return ScalingDiag{find_matrix(all, "scaling").col(0), config.scaling};
  };
  switch (config.kind) {
    case ModelKind::kMostPopular: {
      const auto& m = find_matrix(all, "counts");
      std::vector<std::int64_t> counts(static_cast<std::size_t>(m.rows()));
      for (Eigen::Index j = 0; j < m.rows(); ++j) counts[j] = static_cast<std::int64_t>(m(j, 0));
      return std::make_unique<MostPopularModel>(config, std::move(items), std::move(counts));
    }
    case ModelKind::kPureSvd:
      return std::make_unique<PureSvdModel>(config, std::move(items),
                                            find_matrix(all, "item_factor"), scaling());
    case ModelKind::kGaSatf:
      return std::make_unique<GaSatfModel>(config, std::move(items), find_matrix(all, "item_factor"),
                                           find_matrix(all, "position_factor"), scaling());
    case ModelKind::kLaSatf:
      return std::make_unique<LaSatfModel>(config, std::move(items), find_matrix(all, "item_factor"),
                                           find_matrix(all, "window_factor"),
                                           find_matrix(all, "shift_factor"), scaling());
  }
  throw Error(ErrorKind::kParse, "unknown model kind");
}

}  // namespace

nlohmann::json config_to_json(const ModelConfig& c) {
  return {
      {"kind", model_kind_name(c.kind)},
      {"rank", c.rank},
      {"scaling", c.scaling},
      {"regime", regime_name(c.regime)},
      {"max_length", c.max_length},
      {"window", c.window},
      {"decay", c.decay},
      {"attention", c.attention == attention::AttentionMode::kIdentity ? "identity" : "power"},
      {"ranks", {c.ranks.user, c.ranks.item, c.ranks.window, c.ranks.shift}},
      {"seed", c.seed},
  };
}

ModelConfig config_from_json(const nlohmann::json& j) {
  try {
    ModelConfig c;
    c.kind = parse_model_kind(j.at("kind").get<std::string>());
    c.rank = j.value("rank", c.rank);
    c.scaling = j.value("scaling", c.scaling);
    c.regime = parse_regime(j.value("regime", std::string("plain")));
    c.max_length = j.value("max_length", c.max_length);
    c.window = j.value("window", c.window);
    c.decay = j.value("decay", c.decay);
    const std::string attention = j.value("attention", std::string("power"));
    require(attention == "power" || attention == "identity", ErrorKind::kConfig,
            "attention must be 'power' or 'identity'");
    c.attention = attention == "identity" ? attention::AttentionMode::kIdentity
                                          : attention::AttentionMode::kPowerDecay;
    if (j.contains("ranks")) {
      const auto r = j.at("ranks").get<std::vector<std::size_t>>();
      require(r.size() == 4, ErrorKind::kConfig, "ranks must list four values");
      c.ranks = {r[0], r[1], r[2], r[3]};
    }
    c.seed = j.value("seed", c.seed);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kConfig, std::string("model config: ") + e.what());
  }
}

void write_model(std::ostream& out, const Recommender& model, int sweep_count) {
  const auto all = matrices_of(model);
  for (const auto& [name, m] : all) {
    if (name != "counts" && name != "scaling") require_orthonormal(name, m);
  }
  nlohmann::json directory = nlohmann::json::array();
  for (const auto& [name, m] : all) {
    directory.push_back({{"name", name}, {"rows", m.rows()}, {"cols", m.cols()}});
  }
  const nlohmann::json header = {
      {"config", config_to_json(model.config())},
      {"sweep_count", sweep_count},
      {"items", model.item_ids()},
      {"matrices", directory},
  };
  const std::string text = header.dump();
  out.write(kMagic, sizeof(kMagic));
  put_le<std::uint32_t>(out, kVersion);
  put_le<std::uint64_t>(out, text.size());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  for (const auto& [name, m] : all) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) put_le<double>(out, m(r, c));
    }
  }
  require(out.good(), ErrorKind::kIo, "failed to write model");
}

StoredModel read_model(std::istream& in) {
  char magic[sizeof(kMagic)];
  in.read(magic, sizeof(magic));
  require(in.gcount() == sizeof(magic) && std::memcmp(magic, kMagic, sizeof(kMagic)) == 0,
          ErrorKind::kParse, "not a model file (bad magic)");
  const auto version = get_le<std::uint32_t>(in);
  require(version == kVersion, ErrorKind::kParse,
          "unsupported model format version " + std::to_string(version));
  const auto length = get_le<std::uint64_t>(in);
  std::string text(length, '\0');
  in.read(text.data(), static_cast<std::streamsize>(length));
  require(static_cast<std::uint64_t>(in.gcount()) == length, ErrorKind::kParse,
          "model file truncated");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("model header: ") + e.what());
  }
  try {
    std::vector<NamedMatrix> all;
    for (const auto& entry : header.at("matrices")) {
    Eigen::MatrixXd m(entry.at("rows").get<Eigen::Index>(), entry.at("cols").get<Eigen::Index>());
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = get_le<double>(in);
    }
    all.emplace_back(entry.at("name").get<std::string>(), std::move(m));
  }
    StoredModel stored;
    stored.sweep_count = header.at("sweep_count").get<int>();
    stored.model = rebuild(config_from_json(header.at("config")),
                           header.at("items").get<std::vector<std::string>>(), all);
    return stored;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("model header: ") + e.what());
  }
}

void save_model(const std::filesystem::path& path, const Recommender& model, int sweep_count) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(out.is_open(), ErrorKind::kIo, "cannot open " + path.string() + " for writing");
  write_model(out, model, sweep_count);
}

StoredModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.is_open(), ErrorKind::kMissingArtifact, "model file not found: " + path.string());
  try {
    return read_model(in);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

}  // namespace seqtf::models
