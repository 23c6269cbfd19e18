#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "config.hpp"

namespace qbcli {

/// Bad command-line usage detected after parsing; maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PollOptions {
  bool once = false;
  std::string feed_file;
  std::string feed_url;
};

struct CollectOptions {
  std::string event;
  std::vector<std::string> sources;
  std::string language;
};

struct TrainOptions {
  std::string model;
  std::string data;
  std::string out;
  std::string unlabeled;
};

struct ClassifyOptions {
  std::string event;
  std::string model = "ensemble";
  std::string out;
};

struct BriefOptions {
  std::string event;
  std::string out;
  std::string format = "markdown";
  std::string model = "ensemble";
  std::string generated_at;
};

struct RecoveryOptions {
  std::string event;
  std::string survey;
  std::string out_dir;
};

struct RougeOptions {
  std::string candidate;
  std::string reference;
  std::string variant = "summary";
};

struct AccuracyOptions {
  std::string pred;
  std::string truth;
};

int run_poll(const PipelineConfig& config, const PollOptions& options);
int run_collect(const PipelineConfig& config, const CollectOptions& options);
int run_train(const PipelineConfig& config, const TrainOptions& options);
int run_classify(const PipelineConfig& config, const ClassifyOptions& options);
int run_brief(const PipelineConfig& config, const BriefOptions& options);
int run_recovery(const PipelineConfig& config, const RecoveryOptions& options);
int run_eval_rouge(const RougeOptions& options);
int run_eval_accuracy(const AccuracyOptions& options);

}  // namespace qbcli
