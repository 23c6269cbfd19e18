#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "quakebrief/classify/cnn.hpp"
#include "quakebrief/classify/generator.hpp"
#include "quakebrief/classify/linear.hpp"
#include "quakebrief/classify/nn.hpp"

namespace qb {

/// Discriminator and generator loss terms. d_total = d_unsupervised +
/// d_supervised and g_total = g_game + g_feature_matching.
struct LossBreakdown {
  double d_total = 0.0;
  double d_unsupervised = 0.0;
  double d_supervised = 0.0;
  double g_total = 0.0;
  double g_game = 0.0;
  double g_feature_matching = 0.0;
};

inline constexpr double kLogClamp = 1e-12;

/// Rows of the probability matrices are distributions over the K+1 = 4
/// classes, column 3 being "fake". Expectations are batch means.
///   d_unsupervised = -mean_real log(1 - p_fake_class) - mean_fake log p_fake_class
///   d_supervised   = -mean_labeled log p(label | x, real)
/// where "real" rows are the labeled rows followed by the unlabeled ones and
/// the conditional renormalizes over the three real classes. Probabilities of
/// zero inside a log are clamped to 1e-12 and counted in `clamp_count`.
LossBreakdown discriminator_loss(const Matrix& p_labeled, std::span<const Label> labels,
                                 const Matrix& p_unlabeled, const Matrix& p_fake,
                                 std::size_t* clamp_count = nullptr);
LossBreakdown discriminator_loss(const Matrix& p_real, std::span<const Label> labels, const Matrix& p_fake,
                                 std::size_t* clamp_count = nullptr);

///   g_game             = -mean log(1 - p_fake_class(G(z)))
///   g_feature_matching = || mean f_real - mean f_fake ||^2
LossBreakdown generator_loss(const Matrix& p_fake, const Matrix& f_real, const Matrix& f_fake,
                             std::size_t* clamp_count = nullptr);

struct GanConfig {
  int iterations = 500;
  std::size_t batch_size = 16;
  AdamConfig discriminator_adam;
  AdamConfig generator_adam;
  double dropout = 0.25;
  double leaky_slope = TextCnn::kDefaultLeakySlope;
  std::uint64_t seed = 0;
};

struct GanModel {
  TextCnn discriminator;  // leaky ReLU, 4 outputs
  Generator generator;
  GanConfig config;
};

GanModel make_gan(std::size_t vocab_size, const GanConfig& config);

/// One training batch. `negatives` are labeled sentences of class `other`:
/// they have no real class, so they join the generated rows on the fake side
/// of the unsupervised loss.
struct GanBatch {
  std::vector<TokenSequence> labeled;
  std::vector<Label> labels;  // each < kNumRealClasses
  std::vector<TokenSequence> unlabeled;
  std::vector<TokenSequence> negatives;
  Matrix noise;  // N_generated x 100
};

/// Dropout multipliers for each group of rows; empty matrices mean no dropout.
struct GanDropout {
  Matrix labeled;
  Matrix unlabeled;
  Matrix negatives;
  Matrix generated;
};

/// Forward-only evaluation of every loss term through the public
/// probability-space loss functions; generator in training mode.
LossBreakdown gan_losses(const GanModel& model, const GanBatch& batch, const GanDropout& dropout,
                         std::size_t* clamp_count = nullptr);

/// L^(D) and its gradient w.r.t. discriminator parameters, generator fixed.
double discriminator_gradients(const GanModel& model, const GanBatch& batch, const GanDropout& dropout,
                               Gradients& grads, LossBreakdown* losses = nullptr);
/// L^(G) and its gradient w.r.t. generator parameters, discriminator fixed.
double generator_gradients(const GanModel& model, const GanBatch& batch, const GanDropout& dropout,
                           Gradients& grads, LossBreakdown* losses = nullptr);

struct GanTrace {
  std::vector<LossBreakdown> history;  // one entry per iteration (discriminator step)
  std::size_t clamp_count = 0;
};

/// Alternates one discriminator and one generator Adam step per iteration.
/// Labeled sentences of class `other` act as negatives (see GanBatch).
GanModel train_gan(std::span<const LabeledSequence> labeled, std::span<const TokenSequence> unlabeled,
                   std::size_t vocab_size, const GanConfig& config, GanTrace* trace = nullptr);

/// kOther when p(fake | x) > 0.5, else the argmax of the renormalized real-class
/// probabilities.
Prediction predict_gan(const GanModel& model, const TokenSequence& sequence);

}  // namespace qb
