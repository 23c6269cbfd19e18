#include "quakebrief/classify/linear.hpp"

#include <cmath>

#include "quakebrief/classify/softmax.hpp"
#include "quakebrief/error.hpp"

namespace qb {

namespace {

constexpr auto kClasses = static_cast<Eigen::Index>(kNumLabels);

Eigen::MatrixXd dense_features(std::span<const LabeledFeatures> data, std::size_t dim) {
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(data.size()), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (const auto& [id, w] : data[i].features.entries) {
      if (id < 0 || static_cast<std::size_t>(id) >= dim) {
        throw ShapeError("linear", "feature id " + std::to_string(id) + " outside dimension " + std::to_string(dim));
      }
      x(static_cast<Eigen::Index>(i), id) = w;
    }
  }
  return x;
}

// N x classes scores.
Eigen::MatrixXd scores_of(const LinearModel& model, const Eigen::MatrixXd& x) {
  Eigen::MatrixXd s = x * model.weights.transpose();
  s.rowwise() += model.bias.transpose();
  return s;
}

// Mean data loss, and when `ds` is set the gradient of it w.r.t. the scores.
double data_loss(LinearKind kind, const Eigen::MatrixXd& scores, std::span<const LabeledFeatures> data,
                 Eigen::MatrixXd* ds) {
  const double n = static_cast<double>(data.size());
  double loss = 0.0;
  if (ds) ds->setZero(scores.rows(), scores.cols());
  for (Eigen::Index i = 0; i < scores.rows(); ++i) {
    const auto y = static_cast<Eigen::Index>(index_of(data[static_cast<std::size_t>(i)].label));
    if (kind == LinearKind::kLogistic) {
      const double top = scores.row(i).maxCoeff();
      const Eigen::RowVectorXd e = (scores.row(i).array() - top).exp();
      const double z = e.sum();
      loss += -(scores(i, y) - top - std::log(z));
      if (ds) {
        ds->row(i) = e / z;
        (*ds)(i, y) -= 1.0;
      }
    } else {
      for (Eigen::Index c = 0; c < kClasses; ++c) {
        const double sign = c == y ? 1.0 : -1.0;
        const double slack = 1.0 - sign * scores(i, c);
        if (slack > 0.0) {
          loss += slack;
          if (ds) (*ds)(i, c) = -sign;
        }
      }
    }
  }
  if (ds) *ds /= n;
  return loss / n;
}

double penalty(const LinearModel& model) { return 0.5 * model.config.l2 * model.weights.squaredNorm(); }

}  // namespace

LinearModel LinearModel::zeros(LinearKind kind, std::size_t dim) {
  LinearModel m;
  m.kind = kind;
  m.dim = dim;
  m.weights = Eigen::MatrixXd::Zero(kClasses, static_cast<Eigen::Index>(dim));
  m.bias = Eigen::VectorXd::Zero(kClasses);
  return m;
}

double linear_objective(const LinearModel& model, std::span<const LabeledFeatures> data) {
  if (data.empty()) throw DataError("linear objective of an empty dataset");
  const Eigen::MatrixXd x = dense_features(data, model.dim);
  return data_loss(model.kind, scores_of(model, x), data, nullptr) + penalty(model);
}

void linear_gradient(const LinearModel& model, std::span<const LabeledFeatures> data,
                     Eigen::MatrixXd& grad_weights, Eigen::VectorXd& grad_bias) {
  if (data.empty()) throw DataError("linear gradient of an empty dataset");
  const Eigen::MatrixXd x = dense_features(data, model.dim);
  Eigen::MatrixXd ds;
  data_loss(model.kind, scores_of(model, x), data, &ds);
  grad_weights = ds.transpose() * x + model.config.l2 * model.weights;
  grad_bias = ds.colwise().sum().transpose();
}

LinearModel train_linear(std::span<const LabeledFeatures> data, std::size_t dim, LinearKind kind,
                         const LinearConfig& config) {
  if (data.empty()) throw DataError("cannot train a linear model on an empty dataset");
  if (config.epochs < 0 || !(config.learning_rate > 0.0) || config.l2 < 0.0) {
    throw ConfigError("linear config needs epochs >= 0, learning_rate > 0, l2 >= 0");
  }
  LinearModel model = LinearModel::zeros(kind, dim);
  model.config = config;
  const Eigen::MatrixXd x = dense_features(data, dim);
  Eigen::MatrixXd ds;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    const double loss = data_loss(kind, scores_of(model, x), data, &ds) + penalty(model);
    if (!std::isfinite(loss)) throw DivergenceError(kind == LinearKind::kLogistic ? "lr" : "svm", epoch);
    const Eigen::MatrixXd gw = ds.transpose() * x + config.l2 * model.weights;
    const Eigen::VectorXd gb = ds.colwise().sum().transpose();
    model.weights -= config.learning_rate * gw;
    model.bias -= config.learning_rate * gb;
  }
  if (!model.weights.allFinite() || !model.bias.allFinite()) {
    throw DivergenceError(kind == LinearKind::kLogistic ? "lr" : "svm", config.epochs);
  }
  return model;
}

Prediction predict_linear(const LinearModel& model, const FeatureVector& features) {
  Eigen::VectorXd s = model.bias;
  for (const auto& [id, w] : features.entries) {
    if (id < 0 || static_cast<std::size_t>(id) >= model.dim) {
      throw ShapeError("linear", "feature id " + std::to_string(id) + " outside dimension " +
                                     std::to_string(model.dim));
    }
    s += w * model.weights.col(id);
  }
  Prediction p;
  p.scores.assign(s.data(), s.data() + s.size());
  p.probabilities = softmax(p.scores);
  p.label = label_from_index(argmax(p.scores));
  return p;
}

}  // namespace qb
