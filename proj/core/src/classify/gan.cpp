#include "quakebrief/classify/gan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "quakebrief/classify/softmax.hpp"
#include "quakebrief/error.hpp"

namespace qb {

namespace {

using Index = Eigen::Index;
constexpr auto kFake = static_cast<Index>(kFakeClass);
constexpr auto kReal = static_cast<Index>(kNumRealClasses);

double clamped_log(double p, std::size_t* clamp_count) {
  if (!(p >= kLogClamp)) {
    if (clamp_count) ++*clamp_count;
    p = kLogClamp;
  }
  return std::log(p);
}

void check_probabilities(const Matrix& p, const char* what) {
  if (p.rows() > 0 && p.cols() != static_cast<Index>(kNumLabels)) {
    throw ShapeError(what, "probability rows must have K+1 = 4 entries");
  }
}

// Probability of "not fake": the mass on the real classes.
double real_mass(const Matrix& p, Index row) { return p.row(row).head(kReal).sum(); }

Matrix stack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  Matrix out(a.rows() + b.rows(), a.cols());
  out << a, b;
  return out;
}

const Matrix* mask_or_null(const Matrix& m) { return m.size() == 0 ? nullptr : &m; }

// Gradient rows w.r.t. logits for the three loss shapes used below.
// -log(1 - p_fake):  p - [j < K] r   (r = softmax over the real logits)
// -log p_fake:       p - e_K
// -log r_y:          r - e_y on the real logits, 0 on the fake logit
Eigen::RowVectorXd grad_not_fake(const Matrix& p, Index row) {
  Eigen::RowVectorXd g = p.row(row);
  g.head(kReal) -= p.row(row).head(kReal) / real_mass(p, row);
  return g;
}

Eigen::RowVectorXd grad_fake(const Matrix& p, Index row) {
  Eigen::RowVectorXd g = p.row(row);
  g(kFake) -= 1.0;
  return g;
}

Eigen::RowVectorXd grad_supervised(const Matrix& p, Index row, Label label) {
  Eigen::RowVectorXd g = Eigen::RowVectorXd::Zero(static_cast<Index>(kNumLabels));
  g.head(kReal) = p.row(row).head(kReal) / real_mass(p, row);
  g(static_cast<Index>(index_of(label))) -= 1.0;
  return g;
}

void check_batch(const GanBatch& batch) {
  if (batch.labeled.size() != batch.labels.size()) throw ShapeError("gan", "labeled rows and labels differ");
  for (Label l : batch.labels) {
    if (index_of(l) >= kNumRealClasses) throw DataError("GAN labeled rows must carry a real class");
  }
  if (batch.noise.rows() > 0 && batch.noise.cols() != static_cast<Index>(Generator::kLatentDim)) {
    throw ShapeError("input", "noise must have 100 columns");
  }
}

struct DiscriminatorPasses {
  TextCnn::Pass labeled;
  TextCnn::Pass unlabeled;
  TextCnn::Pass negatives;
  TextCnn::Pass generated;
  Matrix p_labeled;
  Matrix p_unlabeled;
  Matrix p_negatives;
  Matrix p_generated;
};

TextCnn::Pass forward_tokens(const TextCnn& d, const std::vector<TokenSequence>& rows, const Matrix& mask) {
  if (rows.empty()) return {};
  return d.forward(rows, mask_or_null(mask));
}

DiscriminatorPasses run_discriminator(const GanModel& model, const GanBatch& batch, const GanDropout& dropout,
                                      const Generator::Pass& generated) {
  const TextCnn& d = model.discriminator;
  DiscriminatorPasses out;
  out.labeled = forward_tokens(d, batch.labeled, dropout.labeled);
  out.unlabeled = forward_tokens(d, batch.unlabeled, dropout.unlabeled);
  out.negatives = forward_tokens(d, batch.negatives, dropout.negatives);
  if (generated.batch > 0) out.generated = d.forward_embedded(generated.output, mask_or_null(dropout.generated));
  out.p_labeled = softmax_rows(out.labeled.logits);
  out.p_unlabeled = softmax_rows(out.unlabeled.logits);
  out.p_negatives = softmax_rows(out.negatives.logits);
  out.p_generated = softmax_rows(out.generated.logits);
  return out;
}

Generator::Pass run_generator(const GanModel& model, const GanBatch& batch) {
  if (batch.noise.rows() == 0) return {};
  return model.generator.forward(batch.noise, true);
}

LossBreakdown combined_losses(const DiscriminatorPasses& d, const GanBatch& batch, std::size_t* clamp_count) {
  LossBreakdown out = discriminator_loss(d.p_labeled, batch.labels, d.p_unlabeled,
                                         stack(d.p_negatives, d.p_generated), clamp_count);
  if (d.p_generated.rows() > 0) {
    const Matrix f_real = stack(d.labeled.features, d.unlabeled.features);
    if (f_real.rows() > 0) {
      const LossBreakdown g = generator_loss(d.p_generated, f_real, d.generated.features, clamp_count);
      out.g_game = g.g_game;
      out.g_feature_matching = g.g_feature_matching;
      out.g_total = g.g_total;
    }
  }
  return out;
}

double discriminator_step_gradients(const GanModel& model, const GanBatch& batch, const GanDropout& dropout,
                                    const Generator::Pass& generated, Gradients& grads, LossBreakdown* losses,
                                    std::size_t* clamp_count) {
  const DiscriminatorPasses d = run_discriminator(model, batch, dropout, generated);
  const LossBreakdown loss = combined_losses(d, batch, clamp_count);
  if (losses) *losses = loss;

  const double n_labeled = static_cast<double>(batch.labeled.size());
  const double n_real = n_labeled + static_cast<double>(batch.unlabeled.size());
  const double n_fake = static_cast<double>(batch.negatives.size()) + static_cast<double>(generated.batch);
  const TextCnn& net = model.discriminator;

  if (!batch.labeled.empty()) {
    Matrix g(d.p_labeled.rows(), d.p_labeled.cols());
    for (Index i = 0; i < g.rows(); ++i) {
      g.row(i) = grad_not_fake(d.p_labeled, i) / n_real +
                 grad_supervised(d.p_labeled, i, batch.labels[static_cast<std::size_t>(i)]) / n_labeled;
    }
    net.backward(d.labeled, g, nullptr, grads);
  }
  if (!batch.unlabeled.empty()) {
    Matrix g(d.p_unlabeled.rows(), d.p_unlabeled.cols());
    for (Index i = 0; i < g.rows(); ++i) g.row(i) = grad_not_fake(d.p_unlabeled, i) / n_real;
    net.backward(d.unlabeled, g, nullptr, grads);
  }
  if (!batch.negatives.empty()) {
    Matrix g(d.p_negatives.rows(), d.p_negatives.cols());
    for (Index i = 0; i < g.rows(); ++i) g.row(i) = grad_fake(d.p_negatives, i) / n_fake;
    net.backward(d.negatives, g, nullptr, grads);
  }
  if (generated.batch > 0) {
    Matrix g(d.p_generated.rows(), d.p_generated.cols());
    for (Index i = 0; i < g.rows(); ++i) g.row(i) = grad_fake(d.p_generated, i) / n_fake;
    net.backward(d.generated, g, nullptr, grads);
  }
  return loss.d_total;
}

double generator_step_gradients(const GanModel& model, const GanBatch& batch, const GanDropout& dropout,
                                const Generator::Pass& generated, Gradients& grads, LossBreakdown* losses,
                                std::size_t* clamp_count) {
  if (generated.batch == 0) throw DataError("generator step needs noise rows");
  if (batch.labeled.empty() && batch.unlabeled.empty()) {
    throw DataError("generator step needs real rows for feature matching");
  }
  const DiscriminatorPasses d = run_discriminator(model, batch, dropout, generated);
  const LossBreakdown loss = combined_losses(d, batch, clamp_count);
  if (losses) *losses = loss;

  const auto n_gen = static_cast<double>(generated.batch);
  Matrix d_logits(d.p_generated.rows(), d.p_generated.cols());
  for (Index i = 0; i < d_logits.rows(); ++i) d_logits.row(i) = grad_not_fake(d.p_generated, i) / n_gen;

  const Matrix f_real = stack(d.labeled.features, d.unlabeled.features);
  const Eigen::RowVectorXd diff = f_real.colwise().mean() - d.generated.features.colwise().mean();
  Matrix d_features(d.generated.features.rows(), d.generated.features.cols());
  d_features.rowwise() = -2.0 * diff / n_gen;

  Gradients scratch = zeros_like(model.discriminator.params());
  const Matrix d_embedded = model.discriminator.backward(d.generated, d_logits, &d_features, scratch);
  model.generator.backward(generated, d_embedded, grads);
  return loss.g_total;
}

}  // namespace

LossBreakdown discriminator_loss(const Matrix& p_labeled, std::span<const Label> labels, const Matrix& p_unlabeled,
                                 const Matrix& p_fake, std::size_t* clamp_count) {
  check_probabilities(p_labeled, "d_loss");
  check_probabilities(p_unlabeled, "d_loss");
  check_probabilities(p_fake, "d_loss");
  if (static_cast<std::size_t>(p_labeled.rows()) != labels.size()) {
    throw ShapeError("d_loss", "labeled probabilities and labels differ in length");
  }
  LossBreakdown out;

  const Index n_real = p_labeled.rows() + p_unlabeled.rows();
  double real_term = 0.0;
  for (Index i = 0; i < p_labeled.rows(); ++i) real_term -= clamped_log(real_mass(p_labeled, i), clamp_count);
  for (Index i = 0; i < p_unlabeled.rows(); ++i) real_term -= clamped_log(real_mass(p_unlabeled, i), clamp_count);
  if (n_real > 0) real_term /= static_cast<double>(n_real);

  double fake_term = 0.0;
  for (Index i = 0; i < p_fake.rows(); ++i) fake_term -= clamped_log(p_fake(i, kFake), clamp_count);
  if (p_fake.rows() > 0) fake_term /= static_cast<double>(p_fake.rows());
  out.d_unsupervised = real_term + fake_term;

  double supervised = 0.0;
  for (Index i = 0; i < p_labeled.rows(); ++i) {
    const std::size_t y = index_of(labels[static_cast<std::size_t>(i)]);
    if (y >= kNumRealClasses) throw DataError("supervised GAN labels must be real classes");
    supervised -= clamped_log(p_labeled(i, static_cast<Index>(y)), clamp_count) -
                  clamped_log(real_mass(p_labeled, i), clamp_count);
  }
  if (p_labeled.rows() > 0) supervised /= static_cast<double>(p_labeled.rows());
  out.d_supervised = supervised;

  out.d_total = out.d_unsupervised + out.d_supervised;
  return out;
}

LossBreakdown discriminator_loss(const Matrix& p_real, std::span<const Label> labels, const Matrix& p_fake,
                                 std::size_t* clamp_count) {
  return discriminator_loss(p_real, labels, Matrix(0, static_cast<Index>(kNumLabels)), p_fake, clamp_count);
}

LossBreakdown generator_loss(const Matrix& p_fake, const Matrix& f_real, const Matrix& f_fake,
                             std::size_t* clamp_count) {
  check_probabilities(p_fake, "g_loss");
  if (p_fake.rows() == 0 || f_real.rows() == 0 || f_fake.rows() == 0) {
    throw DataError("generator loss needs non-empty batches");
  }
  if (f_real.cols() != f_fake.cols()) throw ShapeError("g_loss", "feature maps differ in width");
  LossBreakdown out;
  double game = 0.0;
  for (Index i = 0; i < p_fake.rows(); ++i) game -= clamped_log(real_mass(p_fake, i), clamp_count);
  out.g_game = game / static_cast<double>(p_fake.rows());
  out.g_feature_matching = (f_real.colwise().mean() - f_fake.colwise().mean()).squaredNorm();
  out.g_total = out.g_game + out.g_feature_matching;
  return out;
}

GanModel make_gan(std::size_t vocab_size, const GanConfig& config) {
  GanModel model;
  model.config = config;
  model.discriminator = TextCnn(vocab_size, kNumLabels, ConvActivation::kLeakyRelu, config.seed, config.leaky_slope);
  model.generator = Generator(config.seed + 1);
  return model;
}

LossBreakdown gan_losses(const GanModel& model, const GanBatch& batch, const GanDropout& dropout,
                         std::size_t* clamp_count) {
  check_batch(batch);
  const Generator::Pass generated = run_generator(model, batch);
  return combined_losses(run_discriminator(model, batch, dropout, generated), batch, clamp_count);
}

double discriminator_gradients(const GanModel& model, const GanBatch& batch, const GanDropout& dropout,
                               Gradients& grads, LossBreakdown* losses) {
  check_batch(batch);
  return discriminator_step_gradients(model, batch, dropout, run_generator(model, batch), grads, losses, nullptr);
}

double generator_gradients(const GanModel& model, const GanBatch& batch, const GanDropout& dropout, Gradients& grads,
                           LossBreakdown* losses) {
  check_batch(batch);
  return generator_step_gradients(model, batch, dropout, run_generator(model, batch), grads, losses, nullptr);
}

namespace {

// Cycles through a shuffled index list, reshuffling at each wrap.
class Sampler {
 public:
  explicit Sampler(std::size_t n) : order_(n) { std::iota(order_.begin(), order_.end(), 0); }

  std::vector<std::size_t> next(std::size_t count, Rng& rng) {
    std::vector<std::size_t> out;
    if (order_.empty()) return out;
    for (std::size_t k = 0; k < count; ++k) {
      if (pos_ == 0) std::shuffle(order_.begin(), order_.end(), rng);
      out.push_back(order_[pos_]);
      pos_ = (pos_ + 1) % order_.size();
    }
    return out;
  }

 private:
  std::vector<std::size_t> order_;
  std::size_t pos_ = 0;
};

}  // namespace

GanModel train_gan(std::span<const LabeledSequence> labeled, std::span<const TokenSequence> unlabeled,
                   std::size_t vocab_size, const GanConfig& config, GanTrace* trace) {
  if (labeled.empty()) throw DataError("cannot train the GAN without labeled data");
  if (config.batch_size == 0 || config.iterations < 0) throw ConfigError("GAN needs batch_size > 0 and iterations >= 0");
  GanModel model = make_gan(vocab_size, config);
  Adam d_adam(model.discriminator.params(), config.discriminator_adam);
  Adam g_adam(model.generator.params(), config.generator_adam);
  Rng rng(config.seed ^ 0xD1B54A32D192ED03ULL);
  Sampler labeled_sampler(labeled.size());
  Sampler unlabeled_sampler(unlabeled.size());
  std::size_t clamps = 0;

  for (int it = 0; it < config.iterations; ++it) {
    GanBatch batch;
    for (std::size_t i : labeled_sampler.next(config.batch_size, rng)) {
      const LabeledSequence& row = labeled[i];
      if (row.label == Label::kOther) {
        batch.negatives.push_back(row.sequence);
      } else {
        batch.labeled.push_back(row.sequence);
        batch.labels.push_back(row.label);
      }
    }
    for (std::size_t i : unlabeled_sampler.next(config.batch_size, rng)) batch.unlabeled.push_back(unlabeled[i]);
    batch.noise = model.generator.sample_noise(config.batch_size, rng);

    GanDropout dropout;
    const auto mask = [&](std::size_t rows) {
      return rows == 0 ? Matrix() : dropout_scale(rows, TextCnn::kFeatureDim, config.dropout, rng);
    };
    dropout.labeled = mask(batch.labeled.size());
    dropout.unlabeled = mask(batch.unlabeled.size());
    dropout.negatives = mask(batch.negatives.size());
    dropout.generated = mask(config.batch_size);

    const Generator::Pass generated = model.generator.forward(batch.noise, true);

    LossBreakdown d_losses;
    Gradients d_grads = zeros_like(model.discriminator.params());
    discriminator_step_gradients(model, batch, dropout, generated, d_grads, &d_losses, &clamps);
    if (!std::isfinite(d_losses.d_total)) throw DivergenceError("gan discriminator", it);
    d_adam.step(model.discriminator.params(), d_grads);

    if (!batch.labeled.empty() || !batch.unlabeled.empty()) {
      LossBreakdown g_losses;
      Gradients g_grads = zeros_like(model.generator.params());
      generator_step_gradients(model, batch, dropout, generated, g_grads, &g_losses, &clamps);
      if (!std::isfinite(g_losses.g_total)) throw DivergenceError("gan generator", it);
      g_adam.step(model.generator.params(), g_grads);
      d_losses.g_game = g_losses.g_game;
      d_losses.g_feature_matching = g_losses.g_feature_matching;
      d_losses.g_total = g_losses.g_total;
    }
    model.generator.update_running_stats(generated);
    if (trace) trace->history.push_back(d_losses);
  }
  if (!all_finite(model.discriminator.params()) || !all_finite(model.generator.params())) {
    throw DivergenceError("gan", config.iterations);
  }
  if (trace) trace->clamp_count = clamps;
  return model;
}

Prediction predict_gan(const GanModel& model, const TokenSequence& sequence) {
  const auto pass = model.discriminator.forward(std::span<const TokenSequence>(&sequence, 1));
  Prediction p;
  p.scores.assign(pass.logits.data(), pass.logits.data() + pass.logits.cols());
  p.probabilities = softmax(p.scores);
  if (p.probabilities[kFakeClass] > 0.5) {
    p.label = Label::kOther;
  } else {
    p.label = label_from_index(argmax(std::span<const double>(p.probabilities).first(kNumRealClasses)));
  }
  return p;
}

}  // namespace qb
