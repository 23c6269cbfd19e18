#include "quakebrief/classify/cnn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "quakebrief/classify/softmax.hpp"
#include "quakebrief/error.hpp"

namespace qb {

namespace {

constexpr auto kL = static_cast<Eigen::Index>(kSequenceLength);
constexpr auto kD = static_cast<Eigen::Index>(kEmbeddingDim);
constexpr auto kF = static_cast<Eigen::Index>(TextCnn::kFiltersPerBank);
constexpr auto kFeat = static_cast<Eigen::Index>(TextCnn::kFeatureDim);

std::size_t weight_param(std::size_t bank) { return TextCnn::kConv3Weight + 2 * bank; }
std::size_t bias_param(std::size_t bank) { return TextCnn::kConv3Bias + 2 * bank; }

// Windows of `height` consecutive embedding rows of one sample, one window per
// output row. Row-major storage makes each window a contiguous run, so the
// im2col matrix is an overlapping view with outer stride 80.
using WindowMap = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>, 0,
                             Eigen::OuterStride<>>;

WindowMap windows(const Matrix& embedded, std::size_t sample, std::size_t height) {
  const double* base = embedded.data() + static_cast<Eigen::Index>(sample) * kL * kD;
  return WindowMap(base, kL - static_cast<Eigen::Index>(height) + 1, static_cast<Eigen::Index>(height) * kD,
                   Eigen::OuterStride<>(kD));
}

}  // namespace

TextCnn::TextCnn(std::size_t vocab_size, std::size_t num_outputs, ConvActivation activation, std::uint64_t seed,
                 double leaky_slope)
    : activation_(activation), leaky_slope_(leaky_slope) {
  if (vocab_size < Vocabulary::kReserved) throw ShapeError("embedding", "vocabulary smaller than reserved ids");
  if (num_outputs == 0) throw ShapeError("fc", "no outputs");
  Rng rng(seed);
  const auto v = static_cast<Eigen::Index>(vocab_size);
  params_.push_back({"embedding", Matrix(v, kD)});
  fill_uniform(params_.back().value, -0.05, 0.05, rng);
  for (std::size_t h : kFilterHeights) {
    const std::string name = "conv" + std::to_string(h);
    Matrix w(static_cast<Eigen::Index>(h) * kD, kF);
    fill_he_normal(w, h * kEmbeddingDim, rng);
    params_.push_back({name + ".weight", std::move(w)});
    params_.push_back({name + ".bias", Matrix::Zero(1, kF)});
  }
  Matrix fc(kFeat, static_cast<Eigen::Index>(num_outputs));
  fill_he_normal(fc, kFeatureDim, rng);
  params_.push_back({"fc.weight", std::move(fc)});
  params_.push_back({"fc.bias", Matrix::Zero(1, static_cast<Eigen::Index>(num_outputs))});
}

double TextCnn::activate(double x) const {
  if (x > 0.0) return x;
  return activation_ == ConvActivation::kLeakyRelu ? leaky_slope_ * x : 0.0;
}

double TextCnn::activate_grad(double x) const {
  if (x > 0.0) return 1.0;
  return activation_ == ConvActivation::kLeakyRelu ? leaky_slope_ : 0.0;
}

Matrix TextCnn::embed(std::span<const TokenSequence> batch) const {
  const Matrix& table = params_[kEmbedding].value;
  Matrix out(static_cast<Eigen::Index>(batch.size()) * kL, kD);
  for (std::size_t n = 0; n < batch.size(); ++n) {
    for (Eigen::Index t = 0; t < kL; ++t) {
      const TokenId id = batch[n].ids[static_cast<std::size_t>(t)];
      if (id < 0 || id >= table.rows()) {
        throw ShapeError("embedding", "token id " + std::to_string(id) + " outside vocabulary of " +
                                          std::to_string(table.rows()));
      }
      out.row(static_cast<Eigen::Index>(n) * kL + t) = table.row(id);
    }
  }
  return out;
}

TextCnn::Pass TextCnn::forward(std::span<const TokenSequence> batch, const Matrix* dropout_scale) const {
  Pass pass = forward_embedded(embed(batch), dropout_scale);
  pass.tokens.assign(batch.begin(), batch.end());
  pass.shapes.layers.insert(pass.shapes.layers.begin(), {"real_input", {pass.batch, kSequenceLength}});
  pass.shapes.layers[1].first = "real_embed";
  return pass;
}

TextCnn::Pass TextCnn::forward_embedded(Matrix embedded, const Matrix* dropout_scale) const {
  if (params_.size() != kNumParams) throw ShapeError("cnn", "model has no parameters");
  if (embedded.cols() != kD || embedded.rows() % kL != 0) {
    throw ShapeError("embed", "expected (N*64) x 80 input, got " + std::to_string(embedded.rows()) + " x " +
                                  std::to_string(embedded.cols()));
  }
  Pass pass;
  pass.batch = static_cast<std::size_t>(embedded.rows() / kL);
  const auto n_rows = static_cast<Eigen::Index>(pass.batch);
  pass.embedded = std::move(embedded);
  pass.shapes.add("fake_embed", {pass.batch, kSequenceLength, kEmbeddingDim});

  pass.pooled.resize(n_rows, kFeat);
  pass.argmax.assign(pass.batch, {});
  for (std::size_t b = 0; b < kFilterHeights.size(); ++b) {
    const std::size_t h = kFilterHeights[b];
    const Matrix& w = params_[weight_param(b)].value;
    const Matrix& bias = params_[bias_param(b)].value;
    const auto positions = kSequenceLength - h + 1;
    for (std::size_t n = 0; n < pass.batch; ++n) {
      Matrix conv = windows(pass.embedded, n, h) * w;
      conv.rowwise() += bias.row(0);
      for (Eigen::Index f = 0; f < kF; ++f) {
        Eigen::Index best = 0;
        const double top = conv.col(f).maxCoeff(&best);
        const auto col = static_cast<Eigen::Index>(b) * kF + f;
        pass.pooled(static_cast<Eigen::Index>(n), col) = top;
        pass.argmax[n][static_cast<std::size_t>(col)] = static_cast<std::size_t>(best);
      }
    }
    const std::string idx = std::to_string(b + 1);
    pass.shapes.add("conv" + idx, {pass.batch, positions, 1, kFiltersPerBank});
    pass.shapes.add("maxpool" + idx, {pass.batch, 1, 1, kFiltersPerBank});
  }
  pass.shapes.add("concat", {pass.batch, 1, 1, kFeatureDim});

  pass.features = pass.pooled.cwiseMax(0.0);
  pass.hidden = pass.pooled.unaryExpr([this](double x) { return activate(x); });
  if (dropout_scale) {
    if (dropout_scale->rows() != n_rows || dropout_scale->cols() != kFeat) {
      throw ShapeError("dropout", "mask must be N x 9");
    }
    pass.dropout_scale = *dropout_scale;
    pass.hidden = pass.hidden.cwiseProduct(pass.dropout_scale);
  }
  pass.shapes.add("dropout", {pass.batch, 1, 1, kFeatureDim});
  pass.shapes.add("flatten", {pass.batch, kFeatureDim});

  pass.logits = pass.hidden * params_[kFcWeight].value;
  pass.logits.rowwise() += params_[kFcBias].value.row(0);
  pass.shapes.add("fc", {pass.batch, num_outputs()});
  return pass;
}

Matrix TextCnn::backward(const Pass& pass, const Matrix& d_logits, const Matrix* d_features, Gradients& grads) const {
  const auto n_rows = static_cast<Eigen::Index>(pass.batch);
  if (d_logits.rows() != n_rows || d_logits.cols() != pass.logits.cols()) {
    throw ShapeError("fc", "d_logits shape does not match the forward pass");
  }
  if (grads.size() != kNumParams) throw ShapeError("cnn", "gradient list has the wrong length");

  grads[kFcWeight] += pass.hidden.transpose() * d_logits;
  grads[kFcBias] += d_logits.colwise().sum();

  Matrix d_pooled = d_logits * params_[kFcWeight].value.transpose();
  if (pass.dropout_scale.size() != 0) d_pooled = d_pooled.cwiseProduct(pass.dropout_scale);
  for (Eigen::Index i = 0; i < d_pooled.size(); ++i) d_pooled.data()[i] *= activate_grad(pass.pooled.data()[i]);
  if (d_features) {
    if (d_features->rows() != n_rows || d_features->cols() != kFeat) {
      throw ShapeError("features", "d_features must be N x 9");
    }
    for (Eigen::Index i = 0; i < d_pooled.size(); ++i) {
      if (pass.pooled.data()[i] > 0.0) d_pooled.data()[i] += d_features->data()[i];
    }
  }

  Matrix d_embedded = Matrix::Zero(pass.embedded.rows(), kD);
  for (std::size_t b = 0; b < kFilterHeights.size(); ++b) {
    const auto span = static_cast<Eigen::Index>(kFilterHeights[b]) * kD;
    const Matrix& w = params_[weight_param(b)].value;
    Matrix& gw = grads[weight_param(b)];
    Matrix& gb = grads[bias_param(b)];
    for (std::size_t n = 0; n < pass.batch; ++n) {
      for (Eigen::Index f = 0; f < kF; ++f) {
        const auto col = static_cast<Eigen::Index>(b) * kF + f;
        const double g = d_pooled(static_cast<Eigen::Index>(n), col);
        if (g == 0.0) continue;
        const auto start = (static_cast<Eigen::Index>(n) * kL +
                            static_cast<Eigen::Index>(pass.argmax[n][static_cast<std::size_t>(col)])) * kD;
        Eigen::Map<const Eigen::VectorXd> window(pass.embedded.data() + start, span);
        Eigen::Map<Eigen::VectorXd> d_window(d_embedded.data() + start, span);
        gw.col(f) += g * window;
        gb(0, f) += g;
        d_window += g * w.col(f);
      }
    }
  }

  if (!pass.tokens.empty()) {
    Matrix& ge = grads[kEmbedding];
    for (std::size_t n = 0; n < pass.batch; ++n) {
      for (Eigen::Index t = 0; t < kL; ++t) {
        ge.row(pass.tokens[n].ids[static_cast<std::size_t>(t)]) += d_embedded.row(static_cast<Eigen::Index>(n) * kL + t);
      }
    }
  }
  return d_embedded;
}

CnnForward cnn_forward(const TextCnn& model, std::span<const TokenSequence> batch, bool train_mode,
                       std::uint64_t dropout_seed) {
  TextCnn::Pass pass;
  if (train_mode) {
    Rng rng(dropout_seed);
    const Matrix mask = dropout_scale(batch.size(), TextCnn::kFeatureDim, 0.25, rng);
    pass = model.forward(batch, &mask);
  } else {
    pass = model.forward(batch);
  }
  return CnnForward{std::move(pass.logits), std::move(pass.features), std::move(pass.shapes)};
}

namespace {

std::vector<TokenSequence> sequences_of(std::span<const LabeledSequence> batch) {
  std::vector<TokenSequence> out;
  out.reserve(batch.size());
  for (const auto& s : batch) out.push_back(s.sequence);
  return out;
}

std::vector<std::size_t> targets_of(std::span<const LabeledSequence> batch) {
  std::vector<std::size_t> out;
  out.reserve(batch.size());
  for (const auto& s : batch) out.push_back(index_of(s.label));
  return out;
}

}  // namespace

double cnn_loss(const TextCnn& model, std::span<const LabeledSequence> batch, const Matrix* dropout_scale) {
  const auto pass = model.forward(sequences_of(batch), dropout_scale);
  return softmax_cross_entropy(pass.logits, targets_of(batch), nullptr);
}

double cnn_loss_gradients(const TextCnn& model, std::span<const LabeledSequence> batch, const Matrix* dropout_scale,
                          Gradients& grads) {
  const auto pass = model.forward(sequences_of(batch), dropout_scale);
  Matrix d_logits;
  const double loss = softmax_cross_entropy(pass.logits, targets_of(batch), &d_logits);
  model.backward(pass, d_logits, nullptr, grads);
  return loss;
}

TextCnn train_cnn(std::span<const LabeledSequence> data, std::size_t vocab_size, const CnnConfig& config) {
  if (data.empty()) throw DataError("cannot train the CNN on an empty dataset");
  if (config.batch_size == 0 || config.epochs < 0) throw ConfigError("CNN needs batch_size > 0 and epochs >= 0");
  TextCnn model(vocab_size, kNumLabels, ConvActivation::kRelu, config.seed);
  Adam adam(model.params(), config.adam);
  Rng rng(config.seed ^ 0x9E3779B97F4A7C15ULL);

  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<LabeledSequence> batch;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
      const std::size_t end = std::min(order.size(), start + config.batch_size);
      batch.clear();
      for (std::size_t i = start; i < end; ++i) batch.push_back(data[order[i]]);
      const Matrix mask = dropout_scale(batch.size(), TextCnn::kFeatureDim, config.dropout, rng);
      Gradients grads = zeros_like(model.params());
      const double loss = cnn_loss_gradients(model, batch, &mask, grads);
      if (!std::isfinite(loss)) throw DivergenceError("cnn", epoch);
      adam.step(model.params(), grads);
    }
    if (!all_finite(model.params())) throw DivergenceError("cnn", epoch);
  }
  return model;
}

Prediction predict_cnn(const TextCnn& model, const TokenSequence& sequence) {
  const auto pass = model.forward(std::span<const TokenSequence>(&sequence, 1));
  Prediction p;
  p.scores.assign(pass.logits.data(), pass.logits.data() + pass.logits.cols());
  p.probabilities = softmax(p.scores);
  p.label = label_from_index(argmax(p.scores));
  return p;
}

}  // namespace qb
