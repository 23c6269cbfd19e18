#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include "fetch.hpp"
#include "quakebrief/briefing.hpp"
#include "quakebrief/classify/checkpoint.hpp"
#include "quakebrief/classify/keyword.hpp"
#include "quakebrief/classify/suite.hpp"
#include "quakebrief/csv.hpp"
#include "quakebrief/error.hpp"
#include "quakebrief/evaluate.hpp"
#include "quakebrief/timeutil.hpp"

namespace qbcli {

namespace {

using nlohmann::json;

void note(const std::string& message) { std::cerr << "quakebrief: " << message << "\n"; }

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qb::IoError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw qb::IoError("cannot write '" + path.string() + "'");
  out << content;
  if (!out.flush()) throw qb::IoError("write failed for '" + path.string() + "'");
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// --- store helpers -------------------------------------------------------------

qb::HazardEvent require_event(const PipelineConfig& config, qb::Store& store, const std::string& id) {
  if (auto e = store.find_event(id)) return *e;
  if (config.feed_file) {
    // Seed the store from the configured feed file so one-shot commands work on a fresh store.
    const auto parsed = qb::fetch_usgs_events(read_file(*config.feed_file));
    const auto significant = qb::filter_events(parsed.events);
    store.persist(significant, {});
    if (auto e = store.find_event(id)) return *e;
  }
  throw qb::DataError("event '" + id + "' is not in the store; run `quakebrief poll --once` first");
}

qb::StoreReceipt collect_into(qb::Store& store, const qb::HazardEvent& event,
                              const std::vector<std::unique_ptr<qb::DocumentSource>>& sources,
                              const qb::CollectionWindow& window, const std::string& language) {
  std::vector<qb::Document> docs;
  for (const auto& source : sources) {
    auto got = qb::collect_documents(event, *source, window, std::nullopt, language);
    note(source->name() + ": " + std::to_string(got.size()) + " documents in window");
    docs.insert(docs.end(), std::make_move_iterator(got.begin()), std::make_move_iterator(got.end()));
  }
  return store.persist({}, docs);
}

std::vector<qb::Document> require_documents(const PipelineConfig& config, qb::Store& store,
                                            const qb::HazardEvent& event) {
  auto docs = store.load_documents(event.id);
  if (!docs.empty()) return docs;
  const auto it = config.sources.find(event.id);
  if (it != config.sources.end()) {
    std::vector<std::unique_ptr<qb::DocumentSource>> sources;
    for (const auto& spec : it->second) sources.push_back(make_source(spec, config.base_dir));
    collect_into(store, event, sources, config.window, config.language);
    docs = store.load_documents(event.id);
  }
  if (docs.empty()) throw qb::DataError("no documents stored for event '" + event.id + "'; run `quakebrief collect`");
  return docs;
}

std::vector<qb::Sentence> document_sentences(std::span<const qb::Document> docs) {
  std::vector<qb::Sentence> out;
  for (const auto& d : docs) {
    auto s = qb::segment_sentences(d.body, d.id);
    out.insert(out.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  }
  return out;
}

// --- models --------------------------------------------------------------------------

qb::TrainingSet training_set(const fs::path& data_path, std::size_t min_count) {
  if (data_path.empty()) throw qb::ConfigError("no training data configured (classifier.training_data)");
  std::vector<std::string> warnings;
  const auto data = qb::load_labeled_dataset(data_path, &warnings);
  for (const auto& w : warnings) note(w);
  return qb::prepare_training_set(data, min_count);
}

std::vector<std::vector<std::string>> read_unlabeled(const std::string& path) {
  std::vector<std::vector<std::string>> out;
  if (path.empty()) return out;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    auto tokens = qb::tokenize(line);
    if (!tokens.empty()) out.push_back(std::move(tokens));
  }
  return out;
}

bool has_checkpoint(const fs::path& dir) { return fs::exists(dir / "manifest.json"); }

/// Loads a cached checkpoint or trains (and caches) one from the configured data.
class ModelCache {
 public:
  explicit ModelCache(const PipelineConfig& config) : config_(config) {}

  qb::LinearClassifier linear(qb::LinearKind kind) {
    const bool lr = kind == qb::LinearKind::kLogistic;
    const fs::path dir = config_.models_dir() / (lr ? "lr" : "svm");
    if (has_checkpoint(dir)) return qb::load_linear_checkpoint(dir);
    note(std::string("training ") + (lr ? "lr" : "svm") + " model");
    auto m = qb::train_linear_classifier(set(), kind, lr ? config_.lr_weighting : config_.svm_weighting,
                                         lr ? config_.lr : config_.svm);
    qb::save_checkpoint(dir, m);
    return m;
  }

  qb::CnnClassifier cnn() {
    const fs::path dir = config_.models_dir() / "cnn";
    if (has_checkpoint(dir)) return qb::load_cnn_checkpoint(dir);
    note("training cnn model");
    auto m = qb::train_cnn_classifier(set(), config_.cnn);
    qb::save_checkpoint(dir, m);
    return m;
  }

  qb::GanClassifier gan() {
    const fs::path dir = config_.models_dir() / "gan";
    if (has_checkpoint(dir)) return qb::load_gan_checkpoint(dir);
    note("training gan model");
    auto m = qb::train_gan_classifier(set(), {}, config_.gan);
    qb::save_checkpoint(dir, m);
    return m;
  }

 private:
  const qb::TrainingSet& set() {
    if (!set_) set_ = training_set(config_.training_data, config_.min_count);
    return *set_;
  }

  const PipelineConfig& config_;
  std::optional<qb::TrainingSet> set_;
};

using SentenceClassifier = std::function<qb::Label(const std::vector<std::string>&)>;

SentenceClassifier make_classifier(const PipelineConfig& config, const std::string& name) {
  ModelCache cache(config);
  if (name == "ensemble") {
    auto e = std::make_shared<qb::Ensemble>(qb::Ensemble{cache.linear(qb::LinearKind::kLogistic),
                                                         cache.linear(qb::LinearKind::kSvm), cache.cnn(), cache.gan()});
    return [e](const std::vector<std::string>& t) { return e->predict(t); };
  }
  const auto method = qb::parse_method(name);
  if (!method) throw UsageError("unknown model '" + name + "' (expected ensemble, keyword, lr, svm, cnn or gan)");
  switch (*method) {
    case qb::Method::kKeyword: {
      if (config.keywords.empty()) throw qb::ConfigError("no keyword file configured (classifier.keywords)");
      auto kw = std::make_shared<qb::KeywordLists>(qb::load_keyword_lists(config.keywords));
      return [kw](const std::vector<std::string>& t) { return qb::keyword_classify(t, *kw); };
    }
    case qb::Method::kLogistic:
    case qb::Method::kSvm: {
      auto m = std::make_shared<qb::LinearClassifier>(
          cache.linear(*method == qb::Method::kSvm ? qb::LinearKind::kSvm : qb::LinearKind::kLogistic));
      return [m](const std::vector<std::string>& t) { return m->predict(t).label; };
    }
    case qb::Method::kCnn: {
      auto m = std::make_shared<qb::CnnClassifier>(cache.cnn());
      return [m](const std::vector<std::string>& t) { return m->predict(t).label; };
    }
    case qb::Method::kGan: {
      auto m = std::make_shared<qb::GanClassifier>(cache.gan());
      return [m](const std::vector<std::string>& t) { return m->predict(t).label; };
    }
  }
  throw UsageError("unknown model '" + name + "'");
}

std::vector<qb::ClassifiedSentence> classify_sentences(std::vector<qb::Sentence> sentences,
                                                       const SentenceClassifier& classify) {
  std::vector<qb::ClassifiedSentence> out;
  out.reserve(sentences.size());
  for (auto& s : sentences) {
    const auto label = classify(qb::tokenize(s.text));
    out.push_back({std::move(s), label});
  }
  return out;
}

// --- csv label files -------------------------------------------------------------

struct LabelColumn {
  std::vector<qb::Label> labels;
  std::vector<std::string> texts;  // empty when the file has no text column
};

LabelColumn read_label_column(const std::string& path) {
  std::istringstream in(read_file(path));
  const auto rows = qb::read_csv(in);
  if (rows.empty()) throw qb::DataError("'" + path + "' is empty");
  const auto& header = rows.front().fields;
  const auto find = [&](const char* name) {
    return static_cast<std::ptrdiff_t>(std::find(header.begin(), header.end(), name) - header.begin());
  };
  const auto label_col = find("label");
  const auto text_col = find("text");
  const auto ncols = static_cast<std::ptrdiff_t>(header.size());
  if (label_col == ncols) throw qb::RowError(path, rows.front().line, "header has no 'label' column");
  LabelColumn out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.fields.size() != header.size()) throw qb::RowError(path, r.line, "expected " + std::to_string(header.size()) + " fields");
    const auto label = qb::parse_label(r.fields[static_cast<std::size_t>(label_col)]);
    if (!label) throw qb::RowError(path, r.line, "unknown label '" + r.fields[static_cast<std::size_t>(label_col)] + "'");
    out.labels.push_back(*label);
    if (text_col != ncols) out.texts.push_back(r.fields[static_cast<std::size_t>(text_col)]);
  }
  return out;
}

std::int64_t default_generated_at(const qb::HazardEvent& event, std::span<const qb::Document> docs) {
  std::int64_t t = event.occurred_at_ms;
  for (const auto& d : docs) t = std::max(t, d.published_at_ms);
  return t;
}

}  // namespace

int run_poll(const PipelineConfig& config, const PollOptions& options) {
  if (!options.once) throw UsageError("poll runs a single cycle; pass --once");
  if (!options.feed_file.empty() && !options.feed_url.empty()) {
    throw UsageError("--feed-file and --feed-url are mutually exclusive");
  }
  std::string payload;
  if (!options.feed_file.empty()) {
    payload = read_file(options.feed_file);
  } else if (!options.feed_url.empty()) {
    payload = http_get(options.feed_url);
  } else if (config.feed_file) {
    payload = read_file(*config.feed_file);
  } else if (!config.feed_url.empty()) {
    payload = http_get(config.feed_url);
  } else {
    throw UsageError("no feed given and none configured");
  }
  const auto parsed = qb::fetch_usgs_events(payload);
  for (const auto& e : parsed.errors) note("feature " + std::to_string(e.feature_index) + " skipped: " + e.message);
  const auto significant = qb::filter_events(parsed.events);
  qb::Store store(config.store_dir);
  const auto receipt = store.persist(significant, {});
  json ids = json::array();
  for (const auto& e : significant) ids.push_back(e.id);
  print_json({{"fetched", parsed.events.size()},
              {"significant", ids},
              {"events_written", receipt.events_written},
              {"events_skipped", receipt.events_skipped}});
  return 0;
}

int run_collect(const PipelineConfig& config, const CollectOptions& options) {
  qb::Store store(config.store_dir);
  const auto event = require_event(config, store, options.event);
  std::vector<std::unique_ptr<qb::DocumentSource>> sources;
  if (!options.sources.empty()) {
    for (const auto& spec : options.sources) sources.push_back(make_source(spec, fs::current_path()));
  } else if (const auto it = config.sources.find(event.id); it != config.sources.end()) {
    for (const auto& spec : it->second) sources.push_back(make_source(spec, config.base_dir));
  } else {
    throw UsageError("no --source given and none configured for event '" + event.id + "'");
  }
  const auto receipt =
      collect_into(store, event, sources, config.window, options.language.empty() ? config.language : options.language);
  print_json({{"event", event.id},
              {"documents_written", receipt.documents_written},
              {"documents_skipped", receipt.documents_skipped}});
  return 0;
}

int run_train(const PipelineConfig& config, const TrainOptions& options) {
  const auto method = qb::parse_method(options.model);
  if (!method || *method == qb::Method::kKeyword) throw UsageError("--model must be one of lr, svm, cnn, gan");
  const fs::path data = options.data.empty() ? config.training_data : fs::path(options.data);
  const fs::path out = options.out.empty() ? config.models_dir() / options.model : fs::path(options.out);
  const auto set = training_set(data, config.min_count);

  std::function<qb::Label(const std::vector<std::string>&)> predict;
  switch (*method) {
    case qb::Method::kLogistic:
    case qb::Method::kSvm: {
      const bool lr = *method == qb::Method::kLogistic;
      auto m = std::make_shared<qb::LinearClassifier>(qb::train_linear_classifier(
          set, lr ? qb::LinearKind::kLogistic : qb::LinearKind::kSvm, lr ? config.lr_weighting : config.svm_weighting,
          lr ? config.lr : config.svm));
      qb::save_checkpoint(out, *m);
      predict = [m](const auto& t) { return m->predict(t).label; };
      break;
    }
    case qb::Method::kCnn: {
      auto m = std::make_shared<qb::CnnClassifier>(qb::train_cnn_classifier(set, config.cnn));
      qb::save_checkpoint(out, *m);
      predict = [m](const auto& t) { return m->predict(t).label; };
      break;
    }
    case qb::Method::kGan: {
      const auto unlabeled = read_unlabeled(options.unlabeled);
      auto m = std::make_shared<qb::GanClassifier>(qb::train_gan_classifier(set, unlabeled, config.gan));
      qb::save_checkpoint(out, *m);
      predict = [m](const auto& t) { return m->predict(t).label; };
      break;
    }
    case qb::Method::kKeyword:
      break;
  }
  std::vector<qb::Label> predicted;
  for (const auto& t : set.tokens) predicted.push_back(predict(t));
  const auto report = qb::accuracy(predicted, set.labels);
  print_json({{"model", options.model},
              {"checkpoint", out.string()},
              {"rows", set.size()},
              {"vocabulary", set.vocabulary.size()},
              {"training_accuracy", report.accuracy}});
  return 0;
}

int run_classify(const PipelineConfig& config, const ClassifyOptions& options) {
  qb::Store store(config.store_dir);
  const auto event = require_event(config, store, options.event);
  const auto docs = require_documents(config, store, event);
  const auto classified = classify_sentences(document_sentences(docs), make_classifier(config, options.model));
  std::string csv = "document_id,index,text,label\n";
  for (const auto& c : classified) {
    csv += qb::csv_escape(c.sentence.document_id) + "," + std::to_string(c.sentence.index) + "," +
           qb::csv_escape(c.sentence.text) + "," + std::string(qb::to_string(c.label)) + "\n";
  }
  if (options.out.empty()) {
    std::cout << csv;
  } else {
    write_file(options.out, csv);
    note("wrote " + std::to_string(classified.size()) + " sentences to " + options.out);
  }
  return 0;
}

int run_brief(const PipelineConfig& config, const BriefOptions& options) {
  qb::RenderFormat format;
  if (options.format == "markdown") {
    format = qb::RenderFormat::kMarkdown;
  } else if (options.format == "plain") {
    format = qb::RenderFormat::kPlain;
  } else {
    throw UsageError("--format must be markdown or plain");
  }
  qb::Store store(config.store_dir);
  const auto event = require_event(config, store, options.event);
  const auto docs = require_documents(config, store, event);
  const auto classified = classify_sentences(document_sentences(docs), make_classifier(config, options.model));
  const std::int64_t generated_at =
      options.generated_at.empty() ? default_generated_at(event, docs) : qb::parse_iso8601_ms(options.generated_at);

  const auto briefing = qb::assemble_briefing(event, classified, config.summarizer, generated_at);
  const std::string ext = format == qb::RenderFormat::kMarkdown ? ".md" : ".txt";
  const fs::path out =
      options.out.empty() ? config.store_dir / "briefings" / (event.id + "_briefing" + ext) : fs::path(options.out);
  const fs::path provenance = out.parent_path() / (out.stem().string() + "_provenance.json");
  write_file(out, qb::render(briefing, format));
  write_file(provenance, qb::provenance_json(briefing).dump(2) + "\n");
  note("wrote " + out.string() + " and " + provenance.string());
  return 0;
}

int run_recovery(const PipelineConfig& config, const RecoveryOptions& options) {
  qb::Store store(config.store_dir);
  const auto event = require_event(config, store, options.event);
  const auto docs = require_documents(config, store, event);
  const fs::path out_dir = options.out_dir.empty() ? config.store_dir / "recovery" / event.id : fs::path(options.out_dir);

  std::vector<qb::FrequencySeries> series;
  std::vector<qb::RecoveryFactorResult> results;
  for (const auto& f : config.recovery.factors) {
    series.push_back(qb::build_frequency_series(docs, f, event.occurred_at_ms, config.recovery));
    results.push_back(qb::detect_recovery_time(series.back(), config.recovery));
  }
  const auto curve = qb::build_recovery_curve(results, config.recovery);
  json report = {{"event", event.id}, {"social", qb::to_json(curve)}};
  write_file(out_dir / "social_curve.svg", qb::render_curve_svg(curve, "Recovery curve (social posts): " + event.id));
  for (std::size_t i = 0; i < series.size(); ++i) {
    write_file(out_dir / ("series_" + series[i].factor + ".svg"), qb::render_series_svg(series[i], &results[i]));
  }

  if (!options.survey.empty()) {
    const auto responses = qb::load_survey(options.survey);
    std::map<std::string, std::string> aspects = config.survey_aspects;
    if (aspects.empty()) {
      for (const auto& r : responses) aspects[r.aspect] = r.aspect;
    }
    std::vector<std::string> warnings;
    const auto survey_results = qb::aggregate_survey(responses, aspects, event.occurred_at_ms, &warnings);
    for (const auto& w : warnings) note(w);
    if (survey_results.empty()) throw qb::DataError("survey '" + options.survey + "' has no usable aspects");
    qb::RecoveryConfig survey_cfg;
    for (const auto& r : survey_results) {
      survey_cfg.factors.push_back({r.factor, {}, 1.0 / static_cast<double>(survey_results.size())});
    }
    const auto survey_curve = qb::build_recovery_curve(survey_results, survey_cfg);
    report["survey"] = qb::to_json(survey_curve);
    write_file(out_dir / "survey_curve.svg", qb::render_curve_svg(survey_curve, "Recovery curve (survey): " + event.id));
  }
  write_file(out_dir / "recovery.json", report.dump(2) + "\n");
  print_json(report);
  return 0;
}

int run_eval_rouge(const RougeOptions& options) {
  const std::string candidate = read_file(options.candidate);
  const std::string reference = read_file(options.reference);
  qb::RougeLVariant variant;
  if (options.variant == "summary") {
    variant = qb::RougeLVariant::kSummaryLevel;
  } else if (options.variant == "whole") {
    variant = qb::RougeLVariant::kWholeText;
  } else {
    throw UsageError("--rouge-l must be summary or whole");
  }
  const qb::RougeReport report{qb::rouge_n(candidate, reference, 1), qb::rouge_n(candidate, reference, 2),
                               qb::rouge_l(candidate, reference, variant)};
  print_json(qb::to_json(report));
  return 0;
}

int run_eval_accuracy(const AccuracyOptions& options) {
  const auto pred = read_label_column(options.pred);
  const auto truth = read_label_column(options.truth);
  if (pred.labels.size() != truth.labels.size()) {
    throw qb::DataError("prediction file has " + std::to_string(pred.labels.size()) + " rows, truth file has " +
                        std::to_string(truth.labels.size()));
  }
  if (!pred.texts.empty() && !truth.texts.empty()) {
    for (std::size_t i = 0; i < pred.texts.size(); ++i) {
      if (pred.texts[i] != truth.texts[i]) {
        throw qb::DataError("row " + std::to_string(i + 1) + ": prediction and truth texts differ");
      }
    }
  }
  print_json(qb::to_json(qb::accuracy(pred.labels, truth.labels)));
  return 0;
}

}  // namespace qbcli
