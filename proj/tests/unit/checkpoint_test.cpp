#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "quakebrief/classify/checkpoint.hpp"
#include "quakebrief/error.hpp"

namespace {

using Tokens = std::vector<std::string>;

qb::TrainingSet small_set() {
  std::vector<qb::LabeledSentence> rows{
      {{"d", 0, "The apartment block collapsed."}, qb::Label::kBuilding},
      {{"d", 1, "Walls cracked in many houses."}, qb::Label::kBuilding},
      {{"d", 2, "The bridge and the road were closed."}, qb::Label::kInfrastructure},
      {{"d", 3, "Power lines fell across the highway."}, qb::Label::kInfrastructure},
      {{"d", 4, "Families moved into tents and shelters."}, qb::Label::kResilience},
      {{"d", 5, "Volunteers brought aid to the displaced."}, qb::Label::kResilience},
      {{"d", 6, "The prime minister spoke on Tuesday."}, qb::Label::kOther},
      {{"d", 7, "It was the strongest in decades."}, qb::Label::kOther},
  };
  return qb::prepare_training_set(rows);
}

const Tokens kProbe{"the", "bridge", "walls", "tents", "unknownword"};

TEST(Checkpoint, LinearRoundTrip) {
  qbtest::TempDir dir;
  const auto set = small_set();
  const auto trained = qb::train_linear_classifier(set, qb::LinearKind::kSvm, qb::Weighting::kTfIdf, {});
  qb::save_checkpoint(dir / "svm", trained);
  EXPECT_EQ(qb::checkpoint_kind(dir / "svm"), "svm");
  const auto loaded = qb::load_linear_checkpoint(dir / "svm");
  EXPECT_EQ(loaded.model.weights, trained.model.weights);
  EXPECT_EQ(loaded.model.bias, trained.model.bias);
  EXPECT_EQ(loaded.weighting, qb::Weighting::kTfIdf);
  EXPECT_EQ(loaded.vocabulary.kept_tokens(), trained.vocabulary.kept_tokens());
  EXPECT_EQ(loaded.predict(kProbe).scores, trained.predict(kProbe).scores);
}

TEST(Checkpoint, CnnRoundTrip) {
  qbtest::TempDir dir;
  qb::CnnConfig config;
  config.epochs = 2;
  config.seed = 4;
  const auto trained = qb::train_cnn_classifier(small_set(), config);
  qb::save_checkpoint(dir / "cnn", trained);
  EXPECT_EQ(qb::checkpoint_kind(dir / "cnn"), "cnn");
  const auto loaded = qb::load_cnn_checkpoint(dir / "cnn");
  for (std::size_t i = 0; i < trained.model.params().size(); ++i) {
    EXPECT_EQ(loaded.model.params()[i].value, trained.model.params()[i].value);
  }
  EXPECT_EQ(loaded.predict(kProbe).probabilities, trained.predict(kProbe).probabilities);
}

TEST(Checkpoint, GanRoundTripIncludesBatchNormStatistics) {
  qbtest::TempDir dir;
  qb::GanConfig config;
  config.iterations = 2;
  config.batch_size = 2;
  config.seed = 5;
  const auto trained = qb::train_gan_classifier(small_set(), {}, config);
  qb::save_checkpoint(dir / "gan", trained);
  const auto loaded = qb::load_gan_checkpoint(dir / "gan");
  for (std::size_t i = 0; i < trained.model.generator.buffers().size(); ++i) {
    EXPECT_EQ(loaded.model.generator.buffers()[i].value, trained.model.generator.buffers()[i].value);
  }
  for (std::size_t i = 0; i < trained.model.generator.params().size(); ++i) {
    EXPECT_EQ(loaded.model.generator.params()[i].value, trained.model.generator.params()[i].value);
  }
  EXPECT_EQ(loaded.predict(kProbe).probabilities, trained.predict(kProbe).probabilities);
  EXPECT_EQ(loaded.model.config.seed, 5u);
}

TEST(Checkpoint, WrongKindAndDamagedFilesAreRejected) {
  qbtest::TempDir dir;
  const auto trained = qb::train_linear_classifier(small_set(), qb::LinearKind::kLogistic, qb::Weighting::kCount, {});
  qb::save_checkpoint(dir / "lr", trained);
  EXPECT_THROW(qb::load_cnn_checkpoint(dir / "lr"), qb::DataError);
  EXPECT_THROW(qb::load_linear_checkpoint(dir / "missing"), qb::IoError);
  for (const auto& entry : qbtest::fs::directory_iterator(dir / "lr")) {
    if (entry.path().extension() == ".f64") {
      qbtest::fs::resize_file(entry.path(), qbtest::fs::file_size(entry.path()) - 8);
      break;
    }
  }
  EXPECT_THROW(qb::load_linear_checkpoint(dir / "lr"), qb::DataError);
}

}  // namespace
