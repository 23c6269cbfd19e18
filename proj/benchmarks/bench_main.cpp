#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "quakebrief/classify/cnn.hpp"
#include "quakebrief/classify/generator.hpp"
#include "quakebrief/evaluate.hpp"
#include "quakebrief/summarize.hpp"

namespace {

std::vector<qb::TokenSequence> random_batch(std::size_t n, std::size_t vocab, qb::Rng& rng) {
  std::uniform_int_distribution<qb::TokenId> pick(2, static_cast<qb::TokenId>(vocab - 1));
  std::vector<qb::TokenSequence> out(n);
  for (auto& seq : out) {
    for (std::size_t i = 0; i < 20; ++i) seq.ids[i] = pick(rng);
  }
  return out;
}

void BM_CnnForward(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  qb::Rng rng(1);
  const qb::TextCnn model(2000, qb::kNumLabels, qb::ConvActivation::kRelu, 1);
  const auto batch = random_batch(n, 2000, rng);
  for (auto _ : state) benchmark::DoNotOptimize(model.forward(batch).logits.data());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CnnForward)->Arg(1)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_GeneratorForward(benchmark::State& state) {
  qb::Rng rng(2);
  const qb::Generator generator(2);
  const qb::Matrix noise = generator.sample_noise(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(generator.forward(noise, true).output.data());
}
BENCHMARK(BM_GeneratorForward)->Arg(2)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_PageRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  qb::Rng rng(3);
  std::uniform_real_distribution<double> w(0.0, 1.0);
  qb::SimilarityGraph graph(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) graph.set_weight(i, j, w(rng) < 0.3 ? w(rng) : 0.0);
  }
  for (auto _ : state) benchmark::DoNotOptimize(qb::pagerank(graph).data());
}
BENCHMARK(BM_PageRank)->Arg(50)->Arg(400)->Unit(benchmark::kMicrosecond);

std::string random_text(std::size_t sentences, qb::Rng& rng) {
  static const std::vector<std::string> words{"road", "bridge", "school", "collapsed", "the", "was", "damaged",
                                              "power", "water", "houses", "in", "closed", "city", "reopened"};
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::string out;
  for (std::size_t s = 0; s < sentences; ++s) {
    for (int i = 0; i < 12; ++i) out += words[pick(rng)] + ' ';
    out += "ok. ";
  }
  return out;
}

void BM_RougeL(benchmark::State& state) {
  qb::Rng rng(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::string candidate = random_text(n, rng);
  const std::string reference = random_text(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(qb::rouge_l(candidate, reference).f1);
}
BENCHMARK(BM_RougeL)->Arg(5)->Arg(40)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
