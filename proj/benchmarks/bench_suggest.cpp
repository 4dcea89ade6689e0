#include <benchmark/benchmark.h>

#include "sample.hpp"

using namespace grlex;

static void BM_Suggest(benchmark::State& state, std::u32string token) {
  const auto& lex = sample_lexicon();
  for (auto _ : state) benchmark::DoNotOptimize(suggest(lex, token, 10));
}
BENCHMARK_CAPTURE(BM_Suggest, stress, std::u32string(U"κέφαλι"));
BENCHMARK_CAPTURE(BM_Suggest, phonetic, std::u32string(U"έβρεση"));
BENCHMARK_CAPTURE(BM_Suggest, optical, std::u32string(U"ΚΕΦΑΛΛΙ"));
BENCHMARK_CAPTURE(BM_Suggest, edit1, std::u32string(U"θαλάσα"));
BENCHMARK_CAPTURE(BM_Suggest, edit2, std::u32string(U"θλάσα"));
BENCHMARK_CAPTURE(BM_Suggest, unknown, std::u32string(U"ξψζξψζ"));

static void BM_PhoneticKey(benchmark::State& state) {
  const auto& lex = sample_lexicon();
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phonetic_key(lex.forms()[i].destressed_key));
    i = (i + 1) % lex.forms().size();
  }
}
BENCHMARK(BM_PhoneticKey);

BENCHMARK_MAIN();
