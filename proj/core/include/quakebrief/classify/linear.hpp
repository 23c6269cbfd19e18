#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "quakebrief/corpus.hpp"
#include "quakebrief/labels.hpp"

namespace qb {

enum class LinearKind { kLogistic, kSvm };

struct LinearConfig {
  double learning_rate = 0.1;
  int epochs = 500;
  double l2 = 1e-4;
  std::uint64_t seed = 0;
};

struct LabeledFeatures {
  FeatureVector features;
  Label label = Label::kOther;
};

/// One weight row and one bias per class over a `dim`-wide sparse feature space.
struct LinearModel {
  LinearKind kind = LinearKind::kLogistic;
  std::size_t dim = 0;
  Eigen::MatrixXd weights;  // kNumLabels x dim
  Eigen::VectorXd bias;     // kNumLabels
  LinearConfig config;

  static LinearModel zeros(LinearKind kind, std::size_t dim);
};

struct Prediction {
  Label label = Label::kOther;
  std::vector<double> probabilities;
  std::vector<double> scores;  // logits or margins
};

/// Full-batch gradient descent. Logistic: multinomial softmax cross-entropy.
/// SVM: one-vs-rest hinge loss, subgradient steps. Both add (l2/2)*||W||^2.
/// Throws DataError on empty data, DivergenceError on a non-finite objective.
LinearModel train_linear(std::span<const LabeledFeatures> data, std::size_t dim, LinearKind kind,
                         const LinearConfig& config);

/// Throws ShapeError when a feature id falls outside the model's dimension.
Prediction predict_linear(const LinearModel& model, const FeatureVector& features);

/// Training objective (mean data loss plus L2 penalty) and its gradient; the
/// SVM gradient is a subgradient at hinge kinks.
double linear_objective(const LinearModel& model, std::span<const LabeledFeatures> data);
void linear_gradient(const LinearModel& model, std::span<const LabeledFeatures> data,
                     Eigen::MatrixXd& grad_weights, Eigen::VectorXd& grad_bias);

}  // namespace qb
