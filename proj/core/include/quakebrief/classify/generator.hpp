#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "quakebrief/classify/nn.hpp"

namespace qb {

/// Geometry of a 3x3 transposed convolution with padding 1. Feature maps are
/// stored HWC: rows are (sample, y, x) positions, columns are channels.
struct DeconvGeometry {
  std::size_t in_height = 0;
  std::size_t in_width = 0;
  std::size_t in_channels = 0;
  std::size_t out_channels = 0;
  std::size_t stride = 1;

  static constexpr std::size_t kKernel = 3;
  static constexpr std::size_t kPad = 1;

  std::size_t out_height() const { return in_height * stride; }
  std::size_t out_width() const { return in_width * stride; }
};

/// `weights` is in_channels x (9 * out_channels), column = (ky*3 + kx)*out + c.
Matrix deconv_forward(const Matrix& input, const Matrix& weights, const Matrix& bias,
                      const DeconvGeometry& geometry, std::size_t batch);
void deconv_backward(const Matrix& input, const Matrix& weights, const Matrix& d_output,
                     const DeconvGeometry& geometry, std::size_t batch, Matrix& d_input, Matrix& d_weights,
                     Matrix& d_bias);

/// Noise (N x 100) -> FC 40960 + ReLU -> (16, 20, 128) -> deconv 64 (stride 2)
/// + ReLU -> batchnorm -> deconv 3 (stride 2) + ReLU -> batchnorm -> deconv 1
/// (stride 1) = a 64 x 80 fake embedding matrix per sample.
class Generator {
 public:
  static constexpr std::size_t kLatentDim = 100;
  static constexpr std::size_t kSeedHeight = 16;
  static constexpr std::size_t kSeedWidth = 20;
  static constexpr std::size_t kSeedChannels = 128;
  static constexpr std::size_t kFcWidth = kSeedHeight * kSeedWidth * kSeedChannels;  // 40,960
  static constexpr std::size_t kDeconv1Channels = 64;
  static constexpr std::size_t kDeconv2Channels = 3;
  static constexpr std::size_t kOutputChannels = 1;
  static constexpr double kBatchNormMomentum = 0.8;
  static constexpr double kBatchNormEpsilon = 1e-3;

  enum Param : std::size_t {
    kFcWeight,
    kFcBias,
    kDeconv1Weight,
    kDeconv1Bias,
    kBn1Gamma,
    kBn1Beta,
    kDeconv2Weight,
    kDeconv2Bias,
    kBn2Gamma,
    kBn2Beta,
    kDeconv3Weight,
    kDeconv3Bias,
    kNumParams
  };

  Generator() = default;
  explicit Generator(std::uint64_t seed);

  std::vector<Tensor>& params() { return params_; }
  const std::vector<Tensor>& params() const { return params_; }
  /// Batchnorm running statistics: bn1.mean, bn1.var, bn2.mean, bn2.var.
  std::vector<Tensor>& buffers() { return buffers_; }
  const std::vector<Tensor>& buffers() const { return buffers_; }

  struct BatchNormCache {
    Matrix normalized;  // x_hat
    Matrix inv_std;     // 1 x C
    Matrix batch_mean;  // 1 x C
    Matrix batch_var;   // 1 x C
  };

  struct Pass {
    std::size_t batch = 0;
    bool training = false;
    Matrix noise;      // N x 100
    Matrix fc_pre;     // N x 40960
    Matrix seed;       // (N*320) x 128 after ReLU
    Matrix deconv1;    // (N*1280) x 64 after ReLU
    BatchNormCache bn1;
    Matrix bn1_out;
    Matrix deconv2;    // (N*5120) x 3 after ReLU
    BatchNormCache bn2;
    Matrix bn2_out;
    Matrix output;     // (N*64) x 80
    LayerShapes shapes;
  };

  /// Training mode normalizes with batch statistics; inference with running ones.
  /// Never mutates the generator.
  Pass forward(const Matrix& noise, bool training) const;
  /// Folds a training pass's batch statistics into the running averages.
  void update_running_stats(const Pass& pass);
  /// Accumulates parameter gradients given d(loss)/d(output).
  void backward(const Pass& pass, const Matrix& d_output, Gradients& grads) const;

  Matrix sample_noise(std::size_t batch, Rng& rng) const;

 private:
  std::vector<Tensor> params_;
  std::vector<Tensor> buffers_;
};

}  // namespace qb
