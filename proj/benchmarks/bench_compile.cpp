#include <benchmark/benchmark.h>

#include "sample.hpp"

using namespace grlex;

static void BM_Parse(benchmark::State& state) {
  const std::string source = sample_source();
  for (auto _ : state) benchmark::DoNotOptimize(parse_ldl(source));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(source.size()));
}
BENCHMARK(BM_Parse);

static void BM_Compile(benchmark::State& state) {
  const LdlDocument doc = parse_ldl(sample_source()).document;
  for (auto _ : state) benchmark::DoNotOptimize(compile(doc));
}
BENCHMARK(BM_Compile)->Unit(benchmark::kMillisecond);

static void BM_WriteBinary(benchmark::State& state) {
  const auto& lex = sample_lexicon();
  for (auto _ : state) benchmark::DoNotOptimize(write_binary(lex));
}
BENCHMARK(BM_WriteBinary);

static void BM_ReadBinary(benchmark::State& state) {
  const auto image = write_binary(sample_lexicon());
  for (auto _ : state) benchmark::DoNotOptimize(read_binary(image));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(image.size()));
}
BENCHMARK(BM_ReadBinary);

BENCHMARK_MAIN();
