#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "quakebrief/classify/linear.hpp"
#include "quakebrief/classify/nn.hpp"
#include "quakebrief/corpus.hpp"

namespace qb {

enum class ConvActivation { kRelu, kLeakyRelu };

/// Sentence CNN: embedding -> three conv banks (heights 3/4/5, full embedding
/// width, 3 filters each) -> global max-pool -> concat(9) -> dropout -> FC.
/// The same network is the GAN discriminator with leaky-ReLU activations and
/// K+1 outputs.
class TextCnn {
 public:
  static constexpr std::array<std::size_t, 3> kFilterHeights{3, 4, 5};
  static constexpr std::size_t kFiltersPerBank = 3;
  static constexpr std::size_t kFeatureDim = kFilterHeights.size() * kFiltersPerBank;
  static constexpr double kDefaultLeakySlope = 0.2;

  enum Param : std::size_t {
    kEmbedding,
    kConv3Weight,
    kConv3Bias,
    kConv4Weight,
    kConv4Bias,
    kConv5Weight,
    kConv5Bias,
    kFcWeight,
    kFcBias,
    kNumParams
  };

  TextCnn() = default;
  /// Embeddings ~ U(-0.05, 0.05), conv and FC weights He-normal, zero biases.
  TextCnn(std::size_t vocab_size, std::size_t num_outputs, ConvActivation activation, std::uint64_t seed,
          double leaky_slope = kDefaultLeakySlope);

  std::size_t vocab_size() const { return static_cast<std::size_t>(params_[kEmbedding].value.rows()); }
  std::size_t num_outputs() const { return static_cast<std::size_t>(params_[kFcBias].value.cols()); }
  ConvActivation activation() const { return activation_; }
  double leaky_slope() const { return leaky_slope_; }

  std::vector<Tensor>& params() { return params_; }
  const std::vector<Tensor>& params() const { return params_; }

  /// Cached activations of one batched forward pass.
  struct Pass {
    std::size_t batch = 0;
    std::vector<TokenSequence> tokens;  // empty when fed embeddings directly
    Matrix embedded;                    // (N*64) x 80
    std::vector<std::array<std::size_t, kFeatureDim>> argmax;
    Matrix pooled;         // N x 9, conv pre-activation at the pooled position
    Matrix dropout_scale;  // N x 9, empty in inference mode
    Matrix hidden;         // N x 9, activated and dropped out
    Matrix logits;         // N x outputs
    Matrix features;       // N x 9, ReLU(pooled): the feature map f(x)
    LayerShapes shapes;
  };

  /// (N*64) x 80 embedding lookup.
  Matrix embed(std::span<const TokenSequence> batch) const;

  /// `dropout_scale` (N x 9) switches on training-mode dropout; nullptr = inference.
  Pass forward(std::span<const TokenSequence> batch, const Matrix* dropout_scale = nullptr) const;
  /// Feeds an (N*64) x 80 embedding matrix straight into the conv layers.
  Pass forward_embedded(Matrix embedded, const Matrix* dropout_scale = nullptr) const;

  /// Accumulates parameter gradients into `grads` (sized like params()) given
  /// d(loss)/d(logits) and optionally d(loss)/d(features). Returns
  /// d(loss)/d(embedded input). Embedding gradients are accumulated only for
  /// token-fed passes.
  Matrix backward(const Pass& pass, const Matrix& d_logits, const Matrix* d_features, Gradients& grads) const;

 private:
  double activate(double x) const;
  double activate_grad(double x) const;

  std::vector<Tensor> params_;
  ConvActivation activation_ = ConvActivation::kRelu;
  double leaky_slope_ = kDefaultLeakySlope;
};

struct CnnForward {
  Matrix logits;    // N x outputs
  Matrix features;  // N x 9
  LayerShapes shapes;
};

/// Batched forward; train mode samples a dropout mask from `dropout_seed`.
CnnForward cnn_forward(const TextCnn& model, std::span<const TokenSequence> batch, bool train_mode,
                       std::uint64_t dropout_seed = 0);

struct LabeledSequence {
  TokenSequence sequence;
  Label label = Label::kOther;
};

struct CnnConfig {
  int epochs = 100;
  std::size_t batch_size = 16;
  AdamConfig adam;
  double dropout = 0.25;
  std::uint64_t seed = 0;
};

/// Mini-batch Adam on mean softmax cross-entropy; embeddings are trained.
/// Deterministic for a given seed. Throws DivergenceError with the epoch.
TextCnn train_cnn(std::span<const LabeledSequence> data, std::size_t vocab_size, const CnnConfig& config);

/// Mean cross-entropy of a batch under a fixed dropout mask (nullptr = none).
double cnn_loss(const TextCnn& model, std::span<const LabeledSequence> batch, const Matrix* dropout_scale);
/// Same loss plus its gradient for every parameter.
double cnn_loss_gradients(const TextCnn& model, std::span<const LabeledSequence> batch,
                          const Matrix* dropout_scale, Gradients& grads);

Prediction predict_cnn(const TextCnn& model, const TokenSequence& sequence);

}  // namespace qb
