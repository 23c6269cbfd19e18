#include "quakebrief/classify/nn.hpp"

#include <cmath>

#include "quakebrief/error.hpp"

namespace qb {

Gradients zeros_like(const std::vector<Tensor>& params) {
  Gradients g;
  g.reserve(params.size());
  for (const auto& p : params) g.push_back(Matrix::Zero(p.value.rows(), p.value.cols()));
  return g;
}

bool all_finite(const std::vector<Tensor>& params) {
  for (const auto& p : params) {
    if (!p.value.allFinite()) return false;
  }
  return true;
}

std::string to_string(const Shape& shape) {
  std::string s = "(";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(shape[i]);
  }
  return s + ")";
}

const Shape& LayerShapes::at(const std::string& name) const {
  for (const auto& [layer, shape] : layers) {
    if (layer == name) return shape;
  }
  throw ShapeError(name, "no shape recorded for this layer");
}

Adam::Adam(const std::vector<Tensor>& params, AdamConfig config)
    : config_(config), m_(zeros_like(params)), v_(zeros_like(params)) {}

void Adam::step(std::vector<Tensor>& params, const Gradients& grads) {
  if (grads.size() != params.size() || m_.size() != params.size()) {
    throw ShapeError("adam", "gradient list does not match parameter list");
  }
  ++steps_;
  const double t = static_cast<double>(steps_);
  const double c1 = 1.0 - std::pow(config_.beta1, t);
  const double c2 = 1.0 - std::pow(config_.beta2, t);
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (grads[i].rows() != params[i].value.rows() || grads[i].cols() != params[i].value.cols()) {
      throw ShapeError("adam", "gradient shape mismatch for " + params[i].name);
    }
    m_[i] = config_.beta1 * m_[i] + (1.0 - config_.beta1) * grads[i];
    v_[i] = config_.beta2 * v_[i] + (1.0 - config_.beta2) * grads[i].cwiseProduct(grads[i]);
    params[i].value.array() -=
        config_.learning_rate * (m_[i].array() / c1) / ((v_[i].array() / c2).sqrt() + config_.epsilon);
  }
}

void fill_he_normal(Matrix& m, std::size_t fan_in, Rng& rng) {
  std::normal_distribution<double> dist(0.0, std::sqrt(2.0 / static_cast<double>(fan_in)));
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = dist(rng);
}

void fill_uniform(Matrix& m, double lo, double hi, Rng& rng) {
  std::uniform_real_distribution<double> dist(lo, hi);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = dist(rng);
}

Matrix dropout_scale(std::size_t rows, std::size_t cols, double rate, Rng& rng) {
  if (rate < 0.0 || rate >= 1.0) throw ConfigError("dropout rate must be in [0, 1)");
  Matrix s(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  std::bernoulli_distribution drop(rate);
  const double keep = 1.0 / (1.0 - rate);
  for (Eigen::Index i = 0; i < s.size(); ++i) s.data()[i] = drop(rng) ? 0.0 : keep;
  return s;
}

Matrix softmax_rows(const Matrix& logits) {
  Matrix p(logits.rows(), logits.cols());
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    const double top = logits.row(i).maxCoeff();
    p.row(i) = (logits.row(i).array() - top).exp();
    p.row(i) /= p.row(i).sum();
  }
  return p;
}

double softmax_cross_entropy(const Matrix& logits, const std::vector<std::size_t>& targets, Matrix* d_logits) {
  if (static_cast<std::size_t>(logits.rows()) != targets.size()) {
    throw ShapeError("cross_entropy", "logit rows and targets differ");
  }
  const double n = static_cast<double>(targets.size());
  double loss = 0.0;
  if (d_logits) d_logits->resize(logits.rows(), logits.cols());
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    const auto y = static_cast<Eigen::Index>(targets[static_cast<std::size_t>(i)]);
    if (y >= logits.cols()) throw ShapeError("cross_entropy", "target index out of range");
    const double top = logits.row(i).maxCoeff();
    const Eigen::RowVectorXd e = (logits.row(i).array() - top).exp();
    const double z = e.sum();
    loss += std::log(z) - (logits(i, y) - top);
    if (d_logits) {
      d_logits->row(i) = e / (z * n);
      (*d_logits)(i, y) -= 1.0 / n;
    }
  }
  return loss / n;
}

}  // namespace qb
