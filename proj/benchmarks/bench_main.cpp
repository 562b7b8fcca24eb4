#include <benchmark/benchmark.h>

#include "aosumm/eval.hpp"
#include "aosumm/model.hpp"
#include "aosumm/oracle.hpp"
#include "aosumm/rouge.hpp"
#include "aosumm/synth.hpp"

namespace {

using namespace aosumm;

const SyntheticData& data() {
  static const SyntheticData d = generate_synthetic(default_synth_config(1, 200));
  return d;
}

const EmbeddingTable& table() {
  static const EmbeddingTable t = synthetic_embeddings(default_synth_config(1, 200));
  return t;
}

void BM_Rouge2(benchmark::State& state) {
  const auto& docs = data().corpus.documents;
  for (auto _ : state) {
    double sum = 0.0;
    for (const auto& d : docs) {
      const auto ref = tokenize(*d.reference);
      sum += rouge_n(selected_tokens(d, std::vector<std::size_t>{0, 1}), ref, 2);
    }
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(docs.size()));
}
BENCHMARK(BM_Rouge2);

void BM_GreedyOracle(benchmark::State& state) {
  const auto& docs = data().corpus.documents;
  const auto scorer = make_scorer(state.range(0) == 0 ? ScorerKind::rouge2 : ScorerKind::embed,
                                  &table());
  for (auto _ : state) {
    for (const auto& d : docs) {
      benchmark::DoNotOptimize(greedy_oracle(d, tokenize(*d.reference), *scorer, 3));
    }
  }
  state.SetLabel(std::string(scorer->name()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(docs.size()));
}
BENCHMARK(BM_GreedyOracle)->Arg(0)->Arg(1);

void BM_Featurize(benchmark::State& state) {
  const auto& corpus = data().corpus;
  const auto idf = IdfTable::build(corpus);
  const auto& keywords = data().aspect_keywords[0].keywords;
  for (auto _ : state) {
    for (const auto& d : corpus.documents) {
      DocumentFeaturizer f(d, keywords, idf, &table());
      for (std::size_t i = 0; i < d.size(); ++i) benchmark::DoNotOptimize(f.featurize(i));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}
BENCHMARK(BM_Featurize);

void BM_MaxF1(benchmark::State& state) {
  const auto filtered = group_and_filter(data().annotations);
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    double sum = 0.0;
    for (const auto& s : filtered.sets) sum += max_f1(s, m, s.sentence_count());
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_MaxF1)->Arg(1)->Arg(3);

}  // namespace
BENCHMARK_MAIN();
