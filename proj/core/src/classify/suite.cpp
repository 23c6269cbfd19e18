#include "quakebrief/classify/suite.hpp"

#include "quakebrief/error.hpp"

namespace qb {

TrainingSet prepare_training_set(std::span<const LabeledSentence> data, std::size_t min_count) {
  TrainingSet set;
  for (const auto& row : data) {
    set.tokens.push_back(tokenize(row.sentence.text));
    set.labels.push_back(row.label);
  }
  set.vocabulary = Vocabulary::build(set.tokens, min_count);
  return set;
}

Prediction LinearClassifier::predict(std::span<const std::string> tokens) const {
  return predict_linear(model, vectorize(tokens, vocabulary, weighting));
}

Prediction CnnClassifier::predict(std::span<const std::string> tokens) const {
  return predict_cnn(model, encode_sequence(tokens, vocabulary));
}

Prediction GanClassifier::predict(std::span<const std::string> tokens) const {
  return predict_gan(model, encode_sequence(tokens, vocabulary));
}

LinearClassifier train_linear_classifier(const TrainingSet& set, LinearKind kind, Weighting weighting,
                                         const LinearConfig& config) {
  LinearClassifier out;
  out.vocabulary = set.vocabulary;
  out.weighting = weighting;
  std::vector<LabeledFeatures> data;
  data.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    data.push_back({vectorize(set.tokens[i], set.vocabulary, weighting), set.labels[i]});
  }
  out.model = train_linear(data, set.vocabulary.size(), kind, config);
  return out;
}

namespace {

std::vector<LabeledSequence> sequences(const TrainingSet& set) {
  std::vector<LabeledSequence> out;
  out.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) out.push_back({encode_sequence(set.tokens[i], set.vocabulary), set.labels[i]});
  return out;
}

}  // namespace

CnnClassifier train_cnn_classifier(const TrainingSet& set, const CnnConfig& config) {
  CnnClassifier out;
  out.vocabulary = set.vocabulary;
  out.config = config;
  out.model = train_cnn(sequences(set), set.vocabulary.size(), config);
  return out;
}

GanClassifier train_gan_classifier(const TrainingSet& set, std::span<const std::vector<std::string>> unlabeled_tokens,
                                   const GanConfig& config, GanTrace* trace) {
  GanClassifier out;
  out.vocabulary = set.vocabulary;
  std::vector<TokenSequence> unlabeled;
  unlabeled.reserve(unlabeled_tokens.size());
  for (const auto& t : unlabeled_tokens) unlabeled.push_back(encode_sequence(t, set.vocabulary));
  out.model = train_gan(sequences(set), unlabeled, set.vocabulary.size(), config, trace);
  return out;
}

std::map<Method, Label> Ensemble::predict_all(std::span<const std::string> tokens) const {
  return {
      {Method::kLogistic, logistic.predict(tokens).label},
      {Method::kSvm, svm.predict(tokens).label},
      {Method::kCnn, cnn.predict(tokens).label},
      {Method::kGan, gan.predict(tokens).label},
  };
}

Label Ensemble::predict(std::span<const std::string> tokens) const { return ensemble_vote(predict_all(tokens)); }

}  // namespace qb
