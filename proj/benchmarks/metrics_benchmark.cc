#include <benchmark/benchmark.h>
#include <fmt/format.h>

#include "oracles/generators.h"
#include "saudit/metrics.h"

namespace saudit {
namespace {

constexpr std::size_t kVocab = 2000;

std::vector<SampleAttribution> MakeAttributions(gen::Fixtures& fx, std::size_t n,
                                                std::size_t tokens) {
  const char* golds[] = {"low", "mid", "high"};
  std::vector<SampleAttribution> attrs;
  for (std::size_t i = 0; i < n; ++i) {
    attrs.push_back(fx.Attribution(fmt::format("s{:05d}", i), kVocab, tokens, golds[i % 3]));
  }
  return attrs;
}

void BM_EpAggregate(benchmark::State& state) {
  gen::Fixtures fx(1);
  auto n = static_cast<std::size_t>(state.range(0));
  auto lex = gen::Fixtures::ToLexicon(fx.Lexicon(kVocab, 0.1));
  auto general = MakeAttributions(fx, n, 30);
  auto candidate = MakeAttributions(fx, n, 30);
  std::vector<AlignedPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    pairs.push_back({general[i].sample_id, SelectExplanationSet(general[i], TopK{10}),
                     SelectExplanationSet(candidate[i], TopK{10})});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(EpAggregate(pairs, lex).ep);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_EpAggregate)->Arg(1000)->Arg(10000);

void BM_SelectExplanationSet(benchmark::State& state) {
  gen::Fixtures fx(2);
  auto attrs = MakeAttributions(fx, 1000, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& a : attrs) {
      benchmark::DoNotOptimize(SelectExplanationSet(a, TopK{10}).members.size());
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * attrs.size()));
}
BENCHMARK(BM_SelectExplanationSet)->Arg(30)->Arg(300);

void BM_EgAggregate(benchmark::State& state) {
  gen::Fixtures fx(3);
  auto n = static_cast<std::size_t>(state.range(0));
  VadLexicon::Map vad_map;
  for (std::size_t i = 0; i < kVocab; i += 3) {
    vad_map.emplace(gen::Fixtures::Word(i), fx.Uniform(0.0, 1.0));
  }
  VadLexicon vad(vad_map);
  auto attrs = MakeAttributions(fx, n, 30);
  auto ids = CorrectlyPredicted(attrs);
  for (auto _ : state) {
    benchmark::DoNotOptimize(EgAggregate(attrs, vad, BinningScheme::VadDefault(), ids).eg);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_EgAggregate)->Arg(1000)->Arg(10000);

}  // namespace
}  // namespace saudit

BENCHMARK_MAIN();
