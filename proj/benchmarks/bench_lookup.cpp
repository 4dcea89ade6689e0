#include <benchmark/benchmark.h>

#include "sample.hpp"

using namespace grlex;

static void BM_TrieLookup(benchmark::State& state) {
  const auto& lex = sample_lexicon();
  std::vector<std::u32string> keys;
  for (const auto& f : lex.forms()) keys.push_back(f.destressed_key);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lex.lookup(keys[i]));
    i = (i + 1) % keys.size();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_TrieLookup);

static void BM_CheckCorrect(benchmark::State& state) {
  const auto& lex = sample_lexicon();
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check(lex, lex.forms()[i].surface));
    i = (i + 1) % lex.forms().size();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_CheckCorrect);

static void BM_CheckMisstressed(benchmark::State& state) {
  const auto& lex = sample_lexicon();
  const std::u32string token = U"κέφαλι";
  for (auto _ : state) benchmark::DoNotOptimize(check(lex, token));
}
BENCHMARK(BM_CheckMisstressed);

static void BM_PrefixWalk(benchmark::State& state) {
  const auto& lex = sample_lexicon();
  for (auto _ : state) {
    size_t n = 0;
    for (const auto& e : lex.trie().walk_prefix(U"κ")) n += e.payloads.size();
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_PrefixWalk);

BENCHMARK_MAIN();
