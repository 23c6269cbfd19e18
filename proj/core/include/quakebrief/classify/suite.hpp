#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "quakebrief/classify/cnn.hpp"
#include "quakebrief/classify/ensemble.hpp"
#include "quakebrief/classify/gan.hpp"
#include "quakebrief/classify/keyword.hpp"
#include "quakebrief/classify/linear.hpp"
#include "quakebrief/corpus.hpp"

namespace qb {

/// Tokenized labeled sentences and the vocabulary built from them.
struct TrainingSet {
  Vocabulary vocabulary;
  std::vector<std::vector<std::string>> tokens;
  std::vector<Label> labels;

  std::size_t size() const { return labels.size(); }
};

TrainingSet prepare_training_set(std::span<const LabeledSentence> data, std::size_t min_count = 1);

struct LinearClassifier {
  Vocabulary vocabulary;
  Weighting weighting = Weighting::kCount;
  LinearModel model;

  Prediction predict(std::span<const std::string> tokens) const;
};

struct CnnClassifier {
  Vocabulary vocabulary;
  TextCnn model;
  CnnConfig config;

  Prediction predict(std::span<const std::string> tokens) const;
};

struct GanClassifier {
  Vocabulary vocabulary;
  GanModel model;

  Prediction predict(std::span<const std::string> tokens) const;
};

LinearClassifier train_linear_classifier(const TrainingSet& set, LinearKind kind, Weighting weighting,
                                         const LinearConfig& config);
CnnClassifier train_cnn_classifier(const TrainingSet& set, const CnnConfig& config);
GanClassifier train_gan_classifier(const TrainingSet& set,
                                   std::span<const std::vector<std::string>> unlabeled_tokens,
                                   const GanConfig& config, GanTrace* trace = nullptr);

/// The four learned classifiers combined by majority vote.
struct Ensemble {
  LinearClassifier logistic;
  LinearClassifier svm;
  CnnClassifier cnn;
  GanClassifier gan;

  std::map<Method, Label> predict_all(std::span<const std::string> tokens) const;
  Label predict(std::span<const std::string> tokens) const;
};

}  // namespace qb
