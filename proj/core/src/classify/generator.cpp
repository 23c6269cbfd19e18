#include "quakebrief/classify/generator.hpp"

#include <cmath>

#include "quakebrief/corpus.hpp"
#include "quakebrief/error.hpp"

namespace qb {

namespace {

using Index = Eigen::Index;

constexpr std::size_t kTaps = DeconvGeometry::kKernel * DeconvGeometry::kKernel;

void check_deconv(const Matrix& input, const Matrix& weights, const DeconvGeometry& g, std::size_t batch,
                  const char* where) {
  const auto rows = static_cast<Index>(batch * g.in_height * g.in_width);
  if (input.rows() != rows || input.cols() != static_cast<Index>(g.in_channels)) {
    throw ShapeError(where, "input is " + std::to_string(input.rows()) + " x " + std::to_string(input.cols()) +
                                ", expected " + std::to_string(rows) + " x " + std::to_string(g.in_channels));
  }
  if (weights.rows() != static_cast<Index>(g.in_channels) ||
      weights.cols() != static_cast<Index>(kTaps * g.out_channels)) {
    throw ShapeError(where, "weights do not match channel counts");
  }
}

// Visits every (input row, output row, tap) triple of the transposed convolution.
template <typename F>
void for_each_tap(const DeconvGeometry& g, std::size_t batch, F&& visit) {
  const auto oh = static_cast<std::ptrdiff_t>(g.out_height());
  const auto ow = static_cast<std::ptrdiff_t>(g.out_width());
  for (std::size_t n = 0; n < batch; ++n) {
    for (std::size_t y = 0; y < g.in_height; ++y) {
      for (std::size_t x = 0; x < g.in_width; ++x) {
        const auto in_row = static_cast<Index>((n * g.in_height + y) * g.in_width + x);
        for (std::size_t ky = 0; ky < DeconvGeometry::kKernel; ++ky) {
          const auto oy = static_cast<std::ptrdiff_t>(y * g.stride + ky) - static_cast<std::ptrdiff_t>(DeconvGeometry::kPad);
          if (oy < 0 || oy >= oh) continue;
          for (std::size_t kx = 0; kx < DeconvGeometry::kKernel; ++kx) {
            const auto ox = static_cast<std::ptrdiff_t>(x * g.stride + kx) - static_cast<std::ptrdiff_t>(DeconvGeometry::kPad);
            if (ox < 0 || ox >= ow) continue;
            const auto out_row = static_cast<Index>((static_cast<std::ptrdiff_t>(n) * oh + oy) * ow + ox);
            visit(in_row, out_row, static_cast<Index>(ky * DeconvGeometry::kKernel + kx));
          }
        }
      }
    }
  }
}

void relu_inplace(Matrix& m) { m = m.cwiseMax(0.0); }

void relu_mask(const Matrix& activated, Matrix& grad) {
  for (Index i = 0; i < grad.size(); ++i) {
    if (!(activated.data()[i] > 0.0)) grad.data()[i] = 0.0;
  }
}

Matrix batchnorm_forward(const Matrix& x, const Matrix& gamma, const Matrix& beta, const Matrix& mean,
                         const Matrix& var, Generator::BatchNormCache& cache) {
  cache.batch_mean = mean;
  cache.batch_var = var;
  cache.inv_std = (var.array() + Generator::kBatchNormEpsilon).rsqrt().matrix();
  cache.normalized = (x.rowwise() - mean.row(0)).array().rowwise() * cache.inv_std.row(0).array();
  Matrix y = cache.normalized.array().rowwise() * gamma.row(0).array();
  y.rowwise() += beta.row(0);
  return y;
}

Matrix batchnorm_backward(const Generator::BatchNormCache& cache, const Matrix& gamma, const Matrix& d_y,
                          bool training, Matrix& d_gamma, Matrix& d_beta) {
  d_gamma += (d_y.cwiseProduct(cache.normalized)).colwise().sum();
  d_beta += d_y.colwise().sum();
  Matrix d_xhat = d_y.array().rowwise() * gamma.row(0).array();
  if (!training) return d_xhat.array().rowwise() * cache.inv_std.row(0).array();
  const double m = static_cast<double>(d_y.rows());
  const Eigen::RowVectorXd sum_d = d_xhat.colwise().sum();
  const Eigen::RowVectorXd sum_dx = d_xhat.cwiseProduct(cache.normalized).colwise().sum();
  Matrix d_x = d_xhat * m;
  d_x.rowwise() -= sum_d;
  d_x -= (cache.normalized.array().rowwise() * sum_dx.array()).matrix();
  return (d_x.array().rowwise() * (cache.inv_std.row(0).array() / m)).matrix();
}

}  // namespace

Matrix deconv_forward(const Matrix& input, const Matrix& weights, const Matrix& bias, const DeconvGeometry& g,
                      std::size_t batch) {
  check_deconv(input, weights, g, batch, "deconv");
  const auto cout = static_cast<Index>(g.out_channels);
  if (bias.rows() != 1 || bias.cols() != cout) throw ShapeError("deconv", "bias must be 1 x out_channels");
  const Matrix cols = input * weights;
  Matrix out(static_cast<Index>(batch * g.out_height() * g.out_width()), cout);
  out.rowwise() = bias.row(0);
  for_each_tap(g, batch, [&](Index in_row, Index out_row, Index tap) {
    out.row(out_row) += cols.row(in_row).segment(tap * cout, cout);
  });
  return out;
}

void deconv_backward(const Matrix& input, const Matrix& weights, const Matrix& d_output, const DeconvGeometry& g,
                     std::size_t batch, Matrix& d_input, Matrix& d_weights, Matrix& d_bias) {
  check_deconv(input, weights, g, batch, "deconv");
  const auto cout = static_cast<Index>(g.out_channels);
  if (d_output.rows() != static_cast<Index>(batch * g.out_height() * g.out_width()) || d_output.cols() != cout) {
    throw ShapeError("deconv", "d_output shape does not match geometry");
  }
  Matrix d_cols = Matrix::Zero(input.rows(), weights.cols());
  for_each_tap(g, batch, [&](Index in_row, Index out_row, Index tap) {
    d_cols.row(in_row).segment(tap * cout, cout) = d_output.row(out_row);
  });
  d_input = d_cols * weights.transpose();
  d_weights += input.transpose() * d_cols;
  d_bias += d_output.colwise().sum();
}

namespace {

const DeconvGeometry kDeconv1{Generator::kSeedHeight, Generator::kSeedWidth, Generator::kSeedChannels,
                              Generator::kDeconv1Channels, 2};
const DeconvGeometry kDeconv2{Generator::kSeedHeight * 2, Generator::kSeedWidth * 2, Generator::kDeconv1Channels,
                              Generator::kDeconv2Channels, 2};
const DeconvGeometry kDeconv3{Generator::kSeedHeight * 4, Generator::kSeedWidth * 4, Generator::kDeconv2Channels,
                              Generator::kOutputChannels, 1};

static_assert(Generator::kSeedHeight * 4 == kSequenceLength && Generator::kSeedWidth * 4 == kEmbeddingDim,
              "generator output must match the discriminator's embedding shape");

Matrix deconv_weights(const DeconvGeometry& g, Rng& rng) {
  Matrix w(static_cast<Index>(g.in_channels), static_cast<Index>(kTaps * g.out_channels));
  fill_he_normal(w, g.in_channels * kTaps, rng);
  return w;
}

}  // namespace

Generator::Generator(std::uint64_t seed) {
  Rng rng(seed);
  Matrix fc(static_cast<Index>(kLatentDim), static_cast<Index>(kFcWidth));
  fill_he_normal(fc, kLatentDim, rng);
  params_.push_back({"fc.weight", std::move(fc)});
  params_.push_back({"fc.bias", Matrix::Zero(1, static_cast<Index>(kFcWidth))});
  params_.push_back({"deconv1.weight", deconv_weights(kDeconv1, rng)});
  params_.push_back({"deconv1.bias", Matrix::Zero(1, static_cast<Index>(kDeconv1Channels))});
  params_.push_back({"bn1.gamma", Matrix::Ones(1, static_cast<Index>(kDeconv1Channels))});
  params_.push_back({"bn1.beta", Matrix::Zero(1, static_cast<Index>(kDeconv1Channels))});
  params_.push_back({"deconv2.weight", deconv_weights(kDeconv2, rng)});
  params_.push_back({"deconv2.bias", Matrix::Zero(1, static_cast<Index>(kDeconv2Channels))});
  params_.push_back({"bn2.gamma", Matrix::Ones(1, static_cast<Index>(kDeconv2Channels))});
  params_.push_back({"bn2.beta", Matrix::Zero(1, static_cast<Index>(kDeconv2Channels))});
  params_.push_back({"deconv3.weight", deconv_weights(kDeconv3, rng)});
  params_.push_back({"deconv3.bias", Matrix::Zero(1, static_cast<Index>(kOutputChannels))});

  buffers_.push_back({"bn1.mean", Matrix::Zero(1, static_cast<Index>(kDeconv1Channels))});
  buffers_.push_back({"bn1.var", Matrix::Ones(1, static_cast<Index>(kDeconv1Channels))});
  buffers_.push_back({"bn2.mean", Matrix::Zero(1, static_cast<Index>(kDeconv2Channels))});
  buffers_.push_back({"bn2.var", Matrix::Ones(1, static_cast<Index>(kDeconv2Channels))});
}

Matrix Generator::sample_noise(std::size_t batch, Rng& rng) const {
  Matrix z(static_cast<Index>(batch), static_cast<Index>(kLatentDim));
  std::normal_distribution<double> normal(0.0, 1.0);
  for (Index i = 0; i < z.size(); ++i) z.data()[i] = normal(rng);
  return z;
}

Generator::Pass Generator::forward(const Matrix& noise, bool training) const {
  if (params_.size() != kNumParams) throw ShapeError("generator", "model has no parameters");
  if (noise.cols() != static_cast<Index>(kLatentDim)) {
    throw ShapeError("input", "noise must have " + std::to_string(kLatentDim) + " columns");
  }
  Pass pass;
  pass.batch = static_cast<std::size_t>(noise.rows());
  pass.training = training;
  pass.noise = noise;
  const std::size_t n = pass.batch;
  pass.shapes.add("input", {n, kLatentDim});

  pass.fc_pre = noise * params_[kFcWeight].value;
  pass.fc_pre.rowwise() += params_[kFcBias].value.row(0);
  pass.shapes.add("fc", {n, kFcWidth});
  // Row-major N x 40960 is already laid out as (N*16*20) x 128, HWC.
  pass.seed = Eigen::Map<const Matrix>(pass.fc_pre.data(), static_cast<Index>(n * kSeedHeight * kSeedWidth),
                                       static_cast<Index>(kSeedChannels));
  relu_inplace(pass.seed);
  pass.shapes.add("reshape", {n, kSeedHeight, kSeedWidth, kSeedChannels});

  auto stats = [&](const Matrix& x, std::size_t mean_buf, Matrix& mean, Matrix& var) {
    if (training) {
      mean = x.colwise().mean();
      var = (x.rowwise() - mean.row(0)).array().square().colwise().mean();
    } else {
      mean = buffers_[mean_buf].value;
      var = buffers_[mean_buf + 1].value;
    }
  };

  pass.deconv1 = deconv_forward(pass.seed, params_[kDeconv1Weight].value, params_[kDeconv1Bias].value, kDeconv1, n);
  relu_inplace(pass.deconv1);
  pass.shapes.add("deconv1", {n, kDeconv1.out_height(), kDeconv1.out_width(), kDeconv1Channels});
  Matrix mean;
  Matrix var;
  stats(pass.deconv1, 0, mean, var);
  pass.bn1_out = batchnorm_forward(pass.deconv1, params_[kBn1Gamma].value, params_[kBn1Beta].value, mean, var, pass.bn1);
  pass.shapes.add("batchnorm1", {n, kDeconv1.out_height(), kDeconv1.out_width(), kDeconv1Channels});

  pass.deconv2 = deconv_forward(pass.bn1_out, params_[kDeconv2Weight].value, params_[kDeconv2Bias].value, kDeconv2, n);
  relu_inplace(pass.deconv2);
  pass.shapes.add("deconv2", {n, kDeconv2.out_height(), kDeconv2.out_width(), kDeconv2Channels});
  stats(pass.deconv2, 2, mean, var);
  pass.bn2_out = batchnorm_forward(pass.deconv2, params_[kBn2Gamma].value, params_[kBn2Beta].value, mean, var, pass.bn2);
  pass.shapes.add("batchnorm2", {n, kDeconv2.out_height(), kDeconv2.out_width(), kDeconv2Channels});

  const Matrix out = deconv_forward(pass.bn2_out, params_[kDeconv3Weight].value, params_[kDeconv3Bias].value, kDeconv3, n);
  pass.shapes.add("deconv3", {n, kDeconv3.out_height(), kDeconv3.out_width(), kOutputChannels});
  // (N*64*80) x 1 is the same buffer as (N*64) x 80.
  pass.output = Eigen::Map<const Matrix>(out.data(), static_cast<Index>(n * kSequenceLength),
                                         static_cast<Index>(kEmbeddingDim));
  return pass;
}

void Generator::update_running_stats(const Pass& pass) {
  if (!pass.training) return;
  const double keep = kBatchNormMomentum;
  buffers_[0].value = keep * buffers_[0].value + (1.0 - keep) * pass.bn1.batch_mean;
  buffers_[1].value = keep * buffers_[1].value + (1.0 - keep) * pass.bn1.batch_var;
  buffers_[2].value = keep * buffers_[2].value + (1.0 - keep) * pass.bn2.batch_mean;
  buffers_[3].value = keep * buffers_[3].value + (1.0 - keep) * pass.bn2.batch_var;
}

void Generator::backward(const Pass& pass, const Matrix& d_output, Gradients& grads) const {
  const std::size_t n = pass.batch;
  if (d_output.rows() != pass.output.rows() || d_output.cols() != pass.output.cols()) {
    throw ShapeError("deconv3", "d_output must match the generated embedding shape");
  }
  if (grads.size() != kNumParams) throw ShapeError("generator", "gradient list has the wrong length");

  const Matrix d_out3 = Eigen::Map<const Matrix>(d_output.data(), d_output.size(), 1);
  Matrix d_bn2_out;
  deconv_backward(pass.bn2_out, params_[kDeconv3Weight].value, d_out3, kDeconv3, n, d_bn2_out, grads[kDeconv3Weight],
                  grads[kDeconv3Bias]);

  Matrix d_deconv2 =
      batchnorm_backward(pass.bn2, params_[kBn2Gamma].value, d_bn2_out, pass.training, grads[kBn2Gamma], grads[kBn2Beta]);
  relu_mask(pass.deconv2, d_deconv2);
  Matrix d_bn1_out;
  deconv_backward(pass.bn1_out, params_[kDeconv2Weight].value, d_deconv2, kDeconv2, n, d_bn1_out,
                  grads[kDeconv2Weight], grads[kDeconv2Bias]);

  Matrix d_deconv1 =
      batchnorm_backward(pass.bn1, params_[kBn1Gamma].value, d_bn1_out, pass.training, grads[kBn1Gamma], grads[kBn1Beta]);
  relu_mask(pass.deconv1, d_deconv1);
  Matrix d_seed;
  deconv_backward(pass.seed, params_[kDeconv1Weight].value, d_deconv1, kDeconv1, n, d_seed, grads[kDeconv1Weight],
                  grads[kDeconv1Bias]);

  relu_mask(pass.seed, d_seed);
  const Eigen::Map<const Matrix> d_fc(d_seed.data(), static_cast<Index>(n), static_cast<Index>(kFcWidth));
  grads[kFcWeight] += pass.noise.transpose() * d_fc;
  grads[kFcBias] += d_fc.colwise().sum();
}

}  // namespace qb
