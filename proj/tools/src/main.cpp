#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "quakebrief/error.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

qbcli::PipelineConfig resolve_config(const std::string& flag) {
  std::string path = flag;
  if (path.empty()) {
    if (const char* env = std::getenv("QB_CONFIG"); env && *env) path = env;
  }
  if (path.empty()) {
    // Built-in defaults; relative paths resolve against the working directory.
    return qbcli::parse_config(nlohmann::json{{"seed", 7}}, std::filesystem::current_path());
  }
  return qbcli::load_config(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Earthquake reconnaissance briefings from hazard feeds and text sources", "quakebrief"};
  app.require_subcommand(1);

  std::string config_path;
  std::string store_override;
  app.add_option("--config", config_path, "Pipeline config JSON (default: $QB_CONFIG)");
  app.add_option("--store", store_override, "Override the configured store directory");

  qbcli::PollOptions poll;
  auto* poll_cmd = app.add_subcommand("poll", "Fetch the USGS feed and store significant events");
  poll_cmd->add_flag("--once", poll.once, "Run a single polling cycle");
  poll_cmd->add_option("--feed-file", poll.feed_file, "Read the feed from a GeoJSON file");
  poll_cmd->add_option("--feed-url", poll.feed_url, "Fetch the feed from a URL");

  qbcli::CollectOptions collect;
  auto* collect_cmd = app.add_subcommand("collect", "Collect documents for a stored event");
  collect_cmd->add_option("--event", collect.event, "Event id")->required();
  collect_cmd->add_option("--source", collect.sources, "Source spec fixture:KIND:DIR (repeatable)");
  collect_cmd->add_option("--language", collect.language, "Keep documents in this language only");

  qbcli::TrainOptions train;
  auto* train_cmd = app.add_subcommand("train", "Train a sentence classifier and write a checkpoint");
  train_cmd->add_option("--model", train.model, "lr, svm, cnn or gan")->required();
  train_cmd->add_option("--data", train.data, "Labeled CSV with header text,label");
  train_cmd->add_option("--out", train.out, "Checkpoint directory");
  train_cmd->add_option("--unlabeled", train.unlabeled, "Unlabeled sentences for the GAN, one per line");

  qbcli::ClassifyOptions classify;
  auto* classify_cmd = app.add_subcommand("classify", "Classify the sentences of an event's documents");
  classify_cmd->add_option("--event", classify.event, "Event id")->required();
  classify_cmd->add_option("--model", classify.model, "ensemble, keyword, lr, svm, cnn or gan");
  classify_cmd->add_option("--out", classify.out, "CSV output (default: standard output)");

  qbcli::BriefOptions brief;
  auto* brief_cmd = app.add_subcommand("brief", "Generate the five-section briefing for an event");
  brief_cmd->add_option("--event", brief.event, "Event id")->required();
  brief_cmd->add_option("--out", brief.out, "Briefing file (provenance sidecar is written next to it)");
  brief_cmd->add_option("--format", brief.format, "markdown or plain");
  brief_cmd->add_option("--model", brief.model, "Classifier used to route sentences");
  brief_cmd->add_option("--generated-at", brief.generated_at, "Timestamp printed in the briefing (ISO-8601)");

  qbcli::RecoveryOptions recovery;
  auto* recovery_cmd = app.add_subcommand("recovery", "Estimate recovery time from posts and surveys");
  recovery_cmd->add_option("--event", recovery.event, "Event id")->required();
  recovery_cmd->add_option("--survey", recovery.survey, "Survey CSV with header aspect,affected,duration,unit");
  recovery_cmd->add_option("--out-dir", recovery.out_dir, "Directory for the JSON report and SVG plots");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate summaries or classifications");
  eval_cmd->require_subcommand(1);
  qbcli::RougeOptions rouge;
  auto* rouge_cmd = eval_cmd->add_subcommand("rouge", "ROUGE-1/2/L of a candidate against a reference");
  rouge_cmd->add_option("--candidate", rouge.candidate, "Candidate text file")->required();
  rouge_cmd->add_option("--reference", rouge.reference, "Reference text file")->required();
  rouge_cmd->add_option("--rouge-l", rouge.variant, "summary (sentence-level union LCS) or whole");
  qbcli::AccuracyOptions acc;
  auto* acc_cmd = eval_cmd->add_subcommand("accuracy", "Accuracy and confusion matrix of predicted labels");
  acc_cmd->add_option("--pred", acc.pred, "CSV with a label column")->required();
  acc_cmd->add_option("--truth", acc.truth, "CSV with a label column")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "quakebrief: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (rouge_cmd->parsed()) return qbcli::run_eval_rouge(rouge);
    if (acc_cmd->parsed()) return qbcli::run_eval_accuracy(acc);

    qbcli::PipelineConfig config = resolve_config(config_path);
    if (!store_override.empty()) config.store_dir = std::filesystem::absolute(store_override);

    if (poll_cmd->parsed()) return qbcli::run_poll(config, poll);
    if (collect_cmd->parsed()) return qbcli::run_collect(config, collect);
    if (train_cmd->parsed()) return qbcli::run_train(config, train);
    if (classify_cmd->parsed()) return qbcli::run_classify(config, classify);
    if (brief_cmd->parsed()) return qbcli::run_brief(config, brief);
    if (recovery_cmd->parsed()) return qbcli::run_recovery(config, recovery);
  } catch (const qbcli::UsageError& e) {
    std::cerr << "quakebrief: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "quakebrief: error: " << e.what() << "\n";
    return kExitData;
  }
  std::cerr << app.help();
  return kExitUsage;
}
