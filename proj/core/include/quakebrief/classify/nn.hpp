#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qb {

/// Dense row-major matrix used for every network tensor.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Rng = std::mt19937_64;

struct Tensor {
  std::string name;
  Matrix value;
};

/// One gradient matrix per parameter tensor, same order and shapes.
using Gradients = std::vector<Matrix>;

Gradients zeros_like(const std::vector<Tensor>& params);
bool all_finite(const std::vector<Tensor>& params);

/// A logical tensor shape such as (N, 62, 1, 3).
using Shape = std::vector<std::size_t>;
std::string to_string(const Shape& shape);

/// Named intermediate shapes recorded during a forward pass.
struct LayerShapes {
  std::vector<std::pair<std::string, Shape>> layers;

  void add(std::string name, Shape shape) { layers.emplace_back(std::move(name), std::move(shape)); }
  /// Throws ShapeError for an unknown layer.
  const Shape& at(const std::string& name) const;
};

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

class Adam {
 public:
  Adam() = default;
  Adam(const std::vector<Tensor>& params, AdamConfig config);

  void step(std::vector<Tensor>& params, const Gradients& grads);
  std::int64_t steps() const { return steps_; }

 private:
  AdamConfig config_;
  Gradients m_;
  Gradients v_;
  std::int64_t steps_ = 0;
};

/// N(0, 2 / fan_in) entries.
void fill_he_normal(Matrix& m, std::size_t fan_in, Rng& rng);
void fill_uniform(Matrix& m, double lo, double hi, Rng& rng);

/// Inverted-dropout multipliers: 0 with probability `rate`, else 1 / (1 - rate).
Matrix dropout_scale(std::size_t rows, std::size_t cols, double rate, Rng& rng);

/// Mean softmax cross-entropy of `logits` rows against `targets`; writes
/// d(loss)/d(logits) into `d_logits` when non-null.
double softmax_cross_entropy(const Matrix& logits, const std::vector<std::size_t>& targets,
                             Matrix* d_logits);

/// Row-wise softmax of a logits matrix.
Matrix softmax_rows(const Matrix& logits);

}  // namespace qb
