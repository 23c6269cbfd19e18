#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gradient_cases.hpp"
#include "quakebrief/classify/cnn.hpp"
#include "quakebrief/classify/generator.hpp"
#include "quakebrief/error.hpp"

namespace {

using qb::Shape;

using ShapeTable = std::vector<std::pair<std::string, Shape>>;

ShapeTable discriminator_table(std::size_t n, std::size_t outputs, bool real) {
  ShapeTable t;
  if (real) {
    t.push_back({"real_input", {n, 64}});
    t.push_back({"real_embed", {n, 64, 80}});
  } else {
    t.push_back({"fake_embed", {n, 64, 80}});
  }
  const ShapeTable rest{{"conv1", {n, 62, 1, 3}}, {"maxpool1", {n, 1, 1, 3}}, {"conv2", {n, 61, 1, 3}},
                        {"maxpool2", {n, 1, 1, 3}}, {"conv3", {n, 60, 1, 3}}, {"maxpool3", {n, 1, 1, 3}},
                        {"concat", {n, 1, 1, 9}},   {"dropout", {n, 1, 1, 9}},   {"flatten", {n, 9}},
                        {"fc", {n, outputs}}};
  t.insert(t.end(), rest.begin(), rest.end());
  return t;
}

std::vector<qb::TokenSequence> batch_of(std::size_t n, std::size_t vocab, qb::Rng& rng) {
  std::vector<qb::TokenSequence> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(qbtest::random_sequence(rng, vocab, 3 + i * 4));
  return out;
}

TEST(Cnn, RealPathShapesFollowTheLayerTable) {
  qb::Rng rng(1);
  const qb::TextCnn cnn(40, 4, qb::ConvActivation::kLeakyRelu, 1);
  for (std::size_t n : {1u, 2u, 7u}) {
    const auto batch = batch_of(n, 40, rng);
    const auto pass = cnn.forward(batch);
    EXPECT_EQ(pass.shapes.layers, discriminator_table(n, 4, true)) << "N=" << n;
    EXPECT_EQ(pass.logits.rows(), static_cast<Eigen::Index>(n));
    EXPECT_EQ(pass.features.cols(), 9);
  }
}

TEST(Cnn, FakeEmbeddingsBypassTheEmbeddingLayer) {
  qb::Rng rng(2);
  const qb::TextCnn cnn(40, 4, qb::ConvActivation::kLeakyRelu, 2);
  const qb::Generator generator(2);
  for (std::size_t n : {1u, 2u, 7u}) {
    const auto g = generator.forward(generator.sample_noise(n, rng), true);
    const auto pass = cnn.forward_embedded(g.output);
    EXPECT_EQ(pass.shapes.layers, discriminator_table(n, 4, false)) << "N=" << n;
  }
}

TEST(Cnn, ClassifierHasFourOutputs) {
  qb::Rng rng(3);
  const qb::TextCnn cnn(40, qb::kNumLabels, qb::ConvActivation::kRelu, 3);
  const auto f = qb::cnn_forward(cnn, batch_of(2, 40, rng), false);
  EXPECT_EQ(f.shapes.at("fc"), (Shape{2, 4}));
  EXPECT_THROW(f.shapes.at("deconv9"), qb::ShapeError);
}

TEST(Cnn, ZeroParametersGiveZeroOutputs) {
  qb::Rng rng(4);
  qb::TextCnn cnn(40, 4, qb::ConvActivation::kRelu, 4);
  for (auto& t : cnn.params()) t.value.setZero();
  const auto f = qb::cnn_forward(cnn, batch_of(3, 40, rng), false);
  EXPECT_TRUE(f.logits.isZero(0.0));
  EXPECT_TRUE(f.features.isZero(0.0));
}

TEST(Cnn, InferenceIsDeterministic) {
  qb::Rng rng(5);
  const qb::TextCnn cnn(40, 4, qb::ConvActivation::kRelu, 5);
  const auto batch = batch_of(3, 40, rng);
  EXPECT_EQ(qb::cnn_forward(cnn, batch, false).logits, qb::cnn_forward(cnn, batch, false).logits);
  EXPECT_EQ(qb::cnn_forward(cnn, batch, true, 9).logits, qb::cnn_forward(cnn, batch, true, 9).logits);
}

TEST(Cnn, FeatureMapIsNonNegative) {
  qb::Rng rng(6);
  const qb::TextCnn cnn(40, 4, qb::ConvActivation::kLeakyRelu, 6);
  const auto f = qb::cnn_forward(cnn, batch_of(7, 40, rng), true, 1);
  EXPECT_GE(f.features.minCoeff(), 0.0);
}

TEST(Cnn, RejectsTokenOutsideVocabulary) {
  const qb::TextCnn cnn(10, 4, qb::ConvActivation::kRelu, 7);
  qb::TokenSequence seq;
  seq.ids[0] = 10;
  try {
    cnn.forward(std::vector<qb::TokenSequence>{seq});
    FAIL() << "expected ShapeError";
  } catch (const qb::ShapeError& e) {
    EXPECT_EQ(e.layer(), "embedding");
  }
}

TEST(Cnn, RejectsMisshapenEmbeddings) {
  const qb::TextCnn cnn(10, 4, qb::ConvActivation::kRelu, 7);
  EXPECT_THROW(cnn.forward_embedded(qb::Matrix::Zero(64, 79)), qb::ShapeError);
  EXPECT_THROW(cnn.forward_embedded(qb::Matrix::Zero(63, 80)), qb::ShapeError);
}

TEST(CnnGradient, MatchesFiniteDifferences) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto r = qbtest::cnn_gradient_case(seed);
    EXPECT_LE(r.max_relative_error, qbtest::kGradientTolerance) << "seed " << seed << ": " << r.worst;
    EXPECT_GT(r.checked, 0u);
  }
}

std::vector<qb::LabeledSequence> toy_dataset() {
  // Two sentences per class, each class marked by its own tokens.
  std::vector<qb::LabeledSequence> data;
  for (std::size_t c = 0; c < qb::kNumLabels; ++c) {
    for (qb::TokenId k = 0; k < 2; ++k) {
      qb::LabeledSequence s;
      const auto base = static_cast<qb::TokenId>(2 + 3 * c);
      s.sequence.ids = {};
      s.sequence.ids[0] = base;
      s.sequence.ids[1] = base + 1 + k;
      s.sequence.ids[2] = 14 + k;
      s.sequence.ids[3] = base;
      s.label = qb::label_from_index(c);
      data.push_back(s);
    }
  }
  return data;
}

TEST(CnnTraining, MemorizesToyDataset) {
  const auto data = toy_dataset();
  qb::CnnConfig config;
  config.epochs = 300;
  config.batch_size = 8;
  config.seed = 11;
  const qb::TextCnn model = qb::train_cnn(data, 16, config);
  std::size_t hits = 0;
  for (const auto& s : data) hits += qb::predict_cnn(model, s.sequence).label == s.label;
  EXPECT_EQ(hits, data.size());
}

TEST(CnnTraining, SameSeedGivesIdenticalParameters) {
  const auto data = toy_dataset();
  qb::CnnConfig config;
  config.epochs = 5;
  config.seed = 3;
  const auto a = qb::train_cnn(data, 16, config);
  const auto b = qb::train_cnn(data, 16, config);
  for (std::size_t i = 0; i < a.params().size(); ++i) EXPECT_EQ(a.params()[i].value, b.params()[i].value);
}

TEST(CnnTraining, RejectsEmptyData) { EXPECT_THROW(qb::train_cnn({}, 16, {}), qb::DataError); }

}  // namespace
