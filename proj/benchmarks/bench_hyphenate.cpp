#include <benchmark/benchmark.h>

#include "sample.hpp"

using namespace grlex;

static void BM_HyphenateRules(benchmark::State& state) {
  const auto& lex = sample_lexicon();
  const auto& rules = HyphenRuleSet::handcrafted();
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyphenate(rules, nullptr, lex.forms()[i].surface));
    i = (i + 1) % lex.forms().size();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_HyphenateRules);

static void BM_HyphenateWithLexicon(benchmark::State& state) {
  const auto& lex = sample_lexicon();
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyphenate(lex.hyphen_rules(), &lex, lex.forms()[i].surface));
    i = (i + 1) % lex.forms().size();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_HyphenateWithLexicon);

static void BM_DeriveVowelRules(benchmark::State& state) {
  const auto& lex = sample_lexicon();
  for (auto _ : state) benchmark::DoNotOptimize(derive_vowel_rules(lex));
}
BENCHMARK(BM_DeriveVowelRules);

BENCHMARK_MAIN();
