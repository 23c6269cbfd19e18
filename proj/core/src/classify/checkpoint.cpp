#include "quakebrief/classify/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include <nlohmann/json.hpp>

#include "quakebrief/error.hpp"

namespace qb {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

using Index = Eigen::Index;

void write_doubles(const fs::path& path, const double* data, std::size_t count) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  if constexpr (std::endian::native == std::endian::little) {
    out.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(count * sizeof(double)));
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      auto bits = std::bit_cast<std::uint64_t>(data[i]);
      bits = __builtin_bswap64(bits);
      out.write(reinterpret_cast<const char*>(&bits), sizeof bits);
    }
  }
  if (!out) throw IoError("write failed for " + path.string());
}

void read_doubles(const fs::path& path, double* data, std::size_t count) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  in.seekg(0, std::ios::end);
  const auto size = static_cast<std::size_t>(in.tellg());
  if (size != count * sizeof(double)) {
    throw DataError(path.string() + ": expected " + std::to_string(count * sizeof(double)) + " bytes, found " +
                    std::to_string(size));
  }
  in.seekg(0);
  in.read(reinterpret_cast<char*>(data), static_cast<std::streamsize>(size));
  if constexpr (std::endian::native != std::endian::little) {
    for (std::size_t i = 0; i < count; ++i) {
      std::uint64_t bits;
      std::memcpy(&bits, data + i, sizeof bits);
      bits = __builtin_bswap64(bits);
      std::memcpy(data + i, &bits, sizeof bits);
    }
  }
}

// Row-major Matrix and column-major Eigen::MatrixXd both serialize row-major.
Matrix as_row_major(const Eigen::MatrixXd& m) { return m; }

class Writer {
 public:
  Writer(fs::path dir, std::string kind) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create checkpoint directory " + dir_.string() + ": " + ec.message());
    manifest_ = json{{"format", kCheckpointFormat},
                     {"version", kCheckpointVersion},
                     {"kind", std::move(kind)},
                     {"architecture",
                      {{"sequence_length", kSequenceLength},
                       {"embedding_dim", kEmbeddingDim},
                       {"num_labels", kNumLabels},
                       {"filter_heights", TextCnn::kFilterHeights},
                       {"filters_per_bank", TextCnn::kFiltersPerBank},
                       {"latent_dim", Generator::kLatentDim}}},
                     {"tensors", json::array()}};
  }

  json& manifest() { return manifest_; }

  void vocabulary(const Vocabulary& v) {
    manifest_["vocabulary"] = {{"tokens", v.kept_tokens()}, {"doc_freq", v.kept_doc_freq()}, {"num_docs", v.num_docs()}};
  }

  void tensor(const std::string& name, const Matrix& m) {
    const std::string file = name + ".f64";
    write_doubles(dir_ / file, m.data(), static_cast<std::size_t>(m.size()));
    manifest_["tensors"].push_back({{"name", name}, {"shape", {m.rows(), m.cols()}}, {"file", file}});
  }

  void tensors(const std::string& prefix, const std::vector<Tensor>& list) {
    for (const auto& t : list) tensor(prefix + t.name, t.value);
  }

  void finish() {
    std::ofstream out(dir_ / "manifest.json", std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write manifest in " + dir_.string());
    out << manifest_.dump(2) << '\n';
    if (!out) throw IoError("write failed for manifest in " + dir_.string());
  }

 private:
  fs::path dir_;
  json manifest_;
};

class Reader {
 public:
  explicit Reader(fs::path dir) : dir_(std::move(dir)) {
    std::ifstream in(dir_ / "manifest.json", std::ios::binary);
    if (!in) throw IoError("no checkpoint manifest in " + dir_.string());
    try {
      manifest_ = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ParseError("checkpoint manifest: " + std::string(e.what()), e.byte);
    }
    if (manifest_.value("format", "") != kCheckpointFormat || manifest_.value("version", 0) != kCheckpointVersion) {
      throw DataError(dir_.string() + " is not a version " + std::to_string(kCheckpointVersion) + " checkpoint");
    }
    const json& arch = manifest_.at("architecture");
    if (arch.at("sequence_length").get<std::size_t>() != kSequenceLength ||
        arch.at("embedding_dim").get<std::size_t>() != kEmbeddingDim ||
        arch.at("num_labels").get<std::size_t>() != kNumLabels) {
      throw ShapeError("checkpoint", "architecture constants differ from this build");
    }
  }

  const json& manifest() const { return manifest_; }

  std::string kind() const { return manifest_.at("kind").get<std::string>(); }

  void expect_kind(std::initializer_list<std::string_view> kinds) const {
    const std::string k = kind();
    for (auto want : kinds) {
      if (k == want) return;
    }
    throw DataError(dir_.string() + ": unexpected checkpoint kind '" + k + "'");
  }

  Vocabulary vocabulary() const {
    const json& v = manifest_.at("vocabulary");
    return Vocabulary::from_parts(v.at("tokens").get<std::vector<std::string>>(),
                                  v.at("doc_freq").get<std::vector<std::size_t>>(), v.at("num_docs").get<std::size_t>());
  }

  Matrix tensor(const std::string& name) const {
    for (const auto& t : manifest_.at("tensors")) {
      if (t.at("name").get<std::string>() != name) continue;
      const auto shape = t.at("shape").get<std::vector<Index>>();
      if (shape.size() != 2) throw ShapeError(name, "checkpoint tensors are two-dimensional");
      Matrix m(shape[0], shape[1]);
      read_doubles(dir_ / t.at("file").get<std::string>(), m.data(), static_cast<std::size_t>(m.size()));
      return m;
    }
    throw DataError(dir_.string() + ": tensor '" + name + "' missing");
  }

  void load_into(const std::string& prefix, std::vector<Tensor>& list) const {
    for (auto& t : list) {
      Matrix m = tensor(prefix + t.name);
      if (m.rows() != t.value.rows() || m.cols() != t.value.cols()) {
        throw ShapeError(t.name, "checkpoint shape differs from the model");
      }
      t.value = std::move(m);
    }
  }

 private:
  fs::path dir_;
  json manifest_;
};

json adam_json(const AdamConfig& a) {
  return {{"learning_rate", a.learning_rate}, {"beta1", a.beta1}, {"beta2", a.beta2}, {"epsilon", a.epsilon}};
}

AdamConfig adam_from(const json& j) {
  return {j.at("learning_rate").get<double>(), j.at("beta1").get<double>(), j.at("beta2").get<double>(),
          j.at("epsilon").get<double>()};
}

}  // namespace

void save_checkpoint(const fs::path& dir, const LinearClassifier& c) {
  Writer w(dir, c.model.kind == LinearKind::kLogistic ? "lr" : "svm");
  w.manifest()["seed"] = c.model.config.seed;
  w.manifest()["config"] = {{"learning_rate", c.model.config.learning_rate},
                            {"epochs", c.model.config.epochs},
                            {"l2", c.model.config.l2},
                            {"weighting", to_string(c.weighting)},
                            {"dim", c.model.dim}};
  w.vocabulary(c.vocabulary);
  w.tensor("weights", as_row_major(c.model.weights));
  w.tensor("bias", as_row_major(c.model.bias.transpose()));
  w.finish();
}

void save_checkpoint(const fs::path& dir, const CnnClassifier& c) {
  Writer w(dir, "cnn");
  w.manifest()["seed"] = c.config.seed;
  w.manifest()["config"] = {{"epochs", c.config.epochs},
                            {"batch_size", c.config.batch_size},
                            {"dropout", c.config.dropout},
                            {"adam", adam_json(c.config.adam)}};
  w.vocabulary(c.vocabulary);
  w.tensors("", c.model.params());
  w.finish();
}

void save_checkpoint(const fs::path& dir, const GanClassifier& c) {
  const GanConfig& cfg = c.model.config;
  Writer w(dir, "gan");
  w.manifest()["seed"] = cfg.seed;
  w.manifest()["config"] = {{"iterations", cfg.iterations},
                            {"batch_size", cfg.batch_size},
                            {"dropout", cfg.dropout},
                            {"leaky_slope", cfg.leaky_slope},
                            {"discriminator_adam", adam_json(cfg.discriminator_adam)},
                            {"generator_adam", adam_json(cfg.generator_adam)}};
  w.vocabulary(c.vocabulary);
  w.tensors("discriminator.", c.model.discriminator.params());
  w.tensors("generator.", c.model.generator.params());
  w.tensors("generator.", c.model.generator.buffers());
  w.finish();
}

std::string checkpoint_kind(const fs::path& dir) { return Reader(dir).kind(); }

LinearClassifier load_linear_checkpoint(const fs::path& dir) {
  const Reader r(dir);
  r.expect_kind({"lr", "svm"});
  const json& cfg = r.manifest().at("config");
  LinearClassifier c;
  c.vocabulary = r.vocabulary();
  c.weighting = parse_weighting(cfg.at("weighting").get<std::string>());
  const auto dim = cfg.at("dim").get<std::size_t>();
  c.model = LinearModel::zeros(r.kind() == "lr" ? LinearKind::kLogistic : LinearKind::kSvm, dim);
  c.model.config.learning_rate = cfg.at("learning_rate").get<double>();
  c.model.config.epochs = cfg.at("epochs").get<int>();
  c.model.config.l2 = cfg.at("l2").get<double>();
  c.model.config.seed = r.manifest().at("seed").get<std::uint64_t>();
  const Matrix weights = r.tensor("weights");
  const Matrix bias = r.tensor("bias");
  if (weights.rows() != c.model.weights.rows() || weights.cols() != c.model.weights.cols() || bias.rows() != 1 ||
      bias.cols() != c.model.bias.size()) {
    throw ShapeError("linear", "checkpoint tensors do not match dim " + std::to_string(dim));
  }
  if (dim != c.vocabulary.size()) throw ShapeError("linear", "checkpoint dim differs from its vocabulary");
  c.model.weights = weights;
  c.model.bias = bias.row(0).transpose();
  return c;
}

CnnClassifier load_cnn_checkpoint(const fs::path& dir) {
  const Reader r(dir);
  r.expect_kind({"cnn"});
  const json& cfg = r.manifest().at("config");
  CnnClassifier c;
  c.vocabulary = r.vocabulary();
  c.config.epochs = cfg.at("epochs").get<int>();
  c.config.batch_size = cfg.at("batch_size").get<std::size_t>();
  c.config.dropout = cfg.at("dropout").get<double>();
  c.config.adam = adam_from(cfg.at("adam"));
  c.config.seed = r.manifest().at("seed").get<std::uint64_t>();
  c.model = TextCnn(c.vocabulary.size(), kNumLabels, ConvActivation::kRelu, c.config.seed);
  r.load_into("", c.model.params());
  return c;
}

GanClassifier load_gan_checkpoint(const fs::path& dir) {
  const Reader r(dir);
  r.expect_kind({"gan"});
  const json& cfg = r.manifest().at("config");
  GanConfig g;
  g.iterations = cfg.at("iterations").get<int>();
  g.batch_size = cfg.at("batch_size").get<std::size_t>();
  g.dropout = cfg.at("dropout").get<double>();
  g.leaky_slope = cfg.at("leaky_slope").get<double>();
  g.discriminator_adam = adam_from(cfg.at("discriminator_adam"));
  g.generator_adam = adam_from(cfg.at("generator_adam"));
  g.seed = r.manifest().at("seed").get<std::uint64_t>();
  GanClassifier c;
  c.vocabulary = r.vocabulary();
  c.model = make_gan(c.vocabulary.size(), g);
  r.load_into("discriminator.", c.model.discriminator.params());
  r.load_into("generator.", c.model.generator.params());
  r.load_into("generator.", c.model.generator.buffers());
  return c;
}

}  // namespace qb
