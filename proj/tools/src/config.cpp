#include "config.hpp"

#include <fstream>

#include "quakebrief/error.hpp"

namespace qbcli {

namespace {

using nlohmann::json;

const json& section(const json& j, const char* key) {
  static const json empty = json::object();
  if (!j.contains(key)) return empty;
  if (!j.at(key).is_object()) throw qb::ConfigError(std::string("config: '") + key + "' must be an object");
  return j.at(key);
}

fs::path resolve(const fs::path& base, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() ? path : (base / path).lexically_normal();
}

fs::path existing(const fs::path& base, const std::string& p, const char* what) {
  fs::path path = resolve(base, p);
  if (!fs::exists(path)) throw qb::ConfigError(std::string("config: ") + what + " '" + path.string() + "' does not exist");
  return path;
}

void read_linear(const json& j, qb::LinearConfig& c, qb::Weighting& w) {
  c.learning_rate = j.value("learning_rate", c.learning_rate);
  c.epochs = j.value("epochs", c.epochs);
  c.l2 = j.value("l2", c.l2);
  if (j.contains("weighting")) w = qb::parse_weighting(j.at("weighting").get<std::string>());
}

qb::ThresholdMode parse_threshold_mode(const std::string& s) {
  if (s == "max_fraction") return qb::ThresholdMode::kMaxFraction;
  if (s == "baseline") return qb::ThresholdMode::kBaseline;
  throw qb::ConfigError("config: unknown recovery.threshold_mode '" + s + "'");
}

}  // namespace

PipelineConfig parse_config(const json& j, const fs::path& base_dir) {
  PipelineConfig c;
  c.base_dir = base_dir;
  try {
    if (!j.is_object()) throw qb::ConfigError("config: top level must be an object");
    c.store_dir = resolve(base_dir, j.value("store_dir", std::string("store")));
    if (!j.contains("seed")) throw qb::ConfigError("config: 'seed' is required");
    c.seed = j.at("seed").get<std::uint64_t>();

    const json& feed = section(j, "feed");
    if (feed.contains("file")) c.feed_file = existing(base_dir, feed.at("file").get<std::string>(), "feed file");
    c.feed_url = feed.value("url", std::string());

    const json& coll = section(j, "collection");
    c.window.news_days = coll.value("news_days", c.window.news_days);
    c.window.social_days = coll.value("social_days", c.window.social_days);
    c.window.validate();
    c.language = coll.value("language", std::string());

    if (j.contains("sources")) {
      for (const auto& [event, specs] : j.at("sources").items()) {
        c.sources[event] = specs.get<std::vector<std::string>>();
      }
    }

    const json& cls = section(j, "classifier");
    if (cls.contains("training_data")) c.training_data = existing(base_dir, cls.at("training_data").get<std::string>(), "training data");
    if (cls.contains("keywords")) c.keywords = existing(base_dir, cls.at("keywords").get<std::string>(), "keyword file");
    c.min_count = cls.value("min_count", c.min_count);
    read_linear(section(cls, "lr"), c.lr, c.lr_weighting);
    read_linear(section(cls, "svm"), c.svm, c.svm_weighting);

    const json& cnn = section(cls, "cnn");
    c.cnn.epochs = cnn.value("epochs", c.cnn.epochs);
    c.cnn.batch_size = cnn.value("batch_size", c.cnn.batch_size);
    c.cnn.adam.learning_rate = cnn.value("learning_rate", c.cnn.adam.learning_rate);
    c.cnn.dropout = cnn.value("dropout", c.cnn.dropout);

    const json& gan = section(cls, "gan");
    c.gan.iterations = gan.value("iterations", c.gan.iterations);
    c.gan.batch_size = gan.value("batch_size", c.gan.batch_size);
    c.gan.discriminator_adam.learning_rate = gan.value("discriminator_lr", c.gan.discriminator_adam.learning_rate);
    c.gan.generator_adam.learning_rate = gan.value("generator_lr", c.gan.generator_adam.learning_rate);
    c.gan.dropout = gan.value("dropout", c.gan.dropout);
    c.gan.leaky_slope = gan.value("leaky_slope", c.gan.leaky_slope);

    const std::string tie = section(cls, "ensemble").value("tie", std::string("cnn"));
    if (tie != "cnn") throw qb::ConfigError("config: only the 'cnn' ensemble tie rule is supported, got '" + tie + "'");

    c.lr.seed = c.svm.seed = c.cnn.seed = c.gan.seed = c.seed;

    const json& sum = section(j, "summarizer");
    c.summarizer.ratio = sum.value("ratio", c.summarizer.ratio);
    c.summarizer.min_sentences = sum.value("min_sentences", c.summarizer.min_sentences);
    c.summarizer.max_sentences = sum.value("max_sentences", c.summarizer.max_sentences);
    c.summarizer.pagerank.damping = sum.value("damping", c.summarizer.pagerank.damping);
    c.summarizer.pagerank.tolerance = sum.value("tolerance", c.summarizer.pagerank.tolerance);
    c.summarizer.pagerank.max_iterations = sum.value("max_iterations", c.summarizer.pagerank.max_iterations);
    if (!(c.summarizer.ratio > 0.0 && c.summarizer.ratio <= 1.0)) throw qb::ConfigError("config: summarizer.ratio must be in (0, 1]");
    if (c.summarizer.min_sentences > c.summarizer.max_sentences) {
      throw qb::ConfigError("config: summarizer.min_sentences exceeds max_sentences");
    }

    const json& rec = section(j, "recovery");
    c.recovery.threshold_fraction = rec.value("threshold_fraction", c.recovery.threshold_fraction);
    c.recovery.steady_days = rec.value("steady_days", c.recovery.steady_days);
    c.recovery.threshold_mode = parse_threshold_mode(rec.value("threshold_mode", std::string("max_fraction")));
    if (rec.contains("factors")) {
      c.recovery.factors.clear();
      for (const auto& f : rec.at("factors")) {
        c.recovery.factors.push_back(
            {f.at("name").get<std::string>(), f.at("keywords").get<std::vector<std::string>>(), f.at("weight").get<double>()});
      }
    }
    c.recovery.validate();
    if (rec.contains("survey_aspects")) c.survey_aspects = rec.at("survey_aspects").get<std::map<std::string, std::string>>();
  } catch (const json::exception& e) {
    throw qb::ConfigError(std::string("config: ") + e.what());
  }
  return c;
}

PipelineConfig load_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qb::ConfigError("cannot open config '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw qb::ConfigError("config '" + path.string() + "': " + e.what());
  }
  return parse_config(j, fs::absolute(path).parent_path());
}

std::unique_ptr<qb::DocumentSource> make_source(const std::string& spec, const fs::path& base_dir) {
  const auto first = spec.find(':');
  const auto second = first == std::string::npos ? std::string::npos : spec.find(':', first + 1);
  if (second == std::string::npos || spec.substr(0, first) != "fixture") {
    throw qb::ConfigError("unsupported source spec '" + spec + "' (expected fixture:KIND:DIR)");
  }
  const auto kind = qb::parse_source_kind(spec.substr(first + 1, second - first - 1));
  if (!kind) throw qb::ConfigError("unknown source kind in '" + spec + "'");
  const fs::path dir = resolve(base_dir, spec.substr(second + 1));
  if (!fs::is_directory(dir)) throw qb::ConfigError("fixture directory '" + dir.string() + "' does not exist");
  return std::make_unique<qb::FixtureSource>(dir, *kind);
}

}  // namespace qbcli
