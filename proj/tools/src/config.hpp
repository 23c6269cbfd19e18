#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quakebrief/classify/cnn.hpp"
#include "quakebrief/classify/gan.hpp"
#include "quakebrief/classify/linear.hpp"
#include "quakebrief/corpus.hpp"
#include "quakebrief/ingest.hpp"
#include "quakebrief/recovery.hpp"
#include "quakebrief/summarize.hpp"

namespace qbcli {

namespace fs = std::filesystem;

struct PipelineConfig {
  fs::path base_dir;  // relative paths in the file resolve against this
  fs::path store_dir;
  std::uint64_t seed = 7;

  std::optional<fs::path> feed_file;
  std::string feed_url;

  qb::CollectionWindow window;
  std::string language;
  std::map<std::string, std::vector<std::string>> sources;  // event id -> source specs

  fs::path training_data;
  fs::path keywords;
  std::size_t min_count = 1;
  qb::Weighting lr_weighting = qb::Weighting::kCount;
  qb::Weighting svm_weighting = qb::Weighting::kCount;
  qb::LinearConfig lr;
  qb::LinearConfig svm;
  qb::CnnConfig cnn;
  qb::GanConfig gan;

  qb::SummaryOptions summarizer;
  qb::RecoveryConfig recovery = qb::RecoveryConfig::defaults();
  std::map<std::string, std::string> survey_aspects;

  fs::path models_dir() const { return store_dir / "models"; }
};

/// Reads and validates a config file. Throws qb::ConfigError.
PipelineConfig load_config(const fs::path& path);
PipelineConfig parse_config(const nlohmann::json& j, const fs::path& base_dir);

/// `fixture:KIND:DIR`; DIR resolves against `base_dir` when relative.
std::unique_ptr<qb::DocumentSource> make_source(const std::string& spec, const fs::path& base_dir);

}  // namespace qbcli
