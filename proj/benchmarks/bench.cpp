#include <benchmark/benchmark.h>

#include <random>

#include "artin/harmonic.hpp"
#include "artin/sweeps.hpp"

using namespace artin;

namespace {

Word random_word(std::mt19937_64& rng, int n, int len) {
  std::uniform_int_distribution<int> pick(0, 2 * n - 1);
  std::vector<Letter> out;
  while (static_cast<int>(out.size()) < len) {
    Letter a = Letter::from_index(pick(rng));
    if (!out.empty() && out.back() == a.inverse()) continue;
    out.push_back(a);
  }
  return Word(out);
}

void BM_NormalForm(benchmark::State& state) {
  auto pres = preset("tri345");
  std::mt19937_64 rng(1);
  std::vector<Word> words;
  for (int i = 0; i < 256; ++i) words.push_back(random_word(rng, 3, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    // Fresh engine each time so the memo table does not hide the work.
    large::ShortlexEngine E(pres, pres.standard_order());
    benchmark::DoNotOptimize(E.nf(words[i++ % words.size()]));
  }
}
BENCHMARK(BM_NormalForm)->Arg(8)->Arg(16)->Arg(32);

void BM_OracleCanonical(benchmark::State& state) {
  auto pres = preset("tri444");
  std::mt19937_64 rng(2);
  std::vector<Word> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(rng, 3, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    oracle::Oracle O(pres);
    benchmark::DoNotOptimize(O.canonical(words[i++ % words.size()]));
  }
}
BENCHMARK(BM_OracleCanonical)->Arg(4)->Arg(6)->Arg(8);

void BM_DihedralMerge(benchmark::State& state) {
  dihedral::Group D(dihedral::Context::standard(static_cast<int>(state.range(0))));
  std::mt19937_64 rng(3);
  std::vector<std::pair<Word, Word>> pairs;
  for (int i = 0; i < 128; ++i) pairs.emplace_back(D.nf(random_word(rng, 2, 6)), D.nf(random_word(rng, 2, 6)));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    auto t = D.merge(a, b);
    benchmark::DoNotOptimize(D.compress(t));
  }
}
BENCHMARK(BM_DihedralMerge)->Arg(3)->Arg(4)->Arg(5);

void BM_BallFromEngine(benchmark::State& state) {
  auto pres = preset("tri444");
  for (auto _ : state) {
    large::ArtinGroup G(pres);
    benchmark::DoNotOptimize(oracle::Ball::from_engine(G, static_cast<int>(state.range(0))).size());
  }
}
BENCHMARK(BM_BallFromEngine)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_D1Scan(benchmark::State& state) {
  large::ArtinGroup G(preset("DA3"));
  auto B = oracle::Ball::from_engine(G, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweeps::d1_scan(G, B, "DA3").cells.size());
}
BENCHMARK(BM_D1Scan)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ConvolutionPowerIteration(benchmark::State& state) {
  large::ArtinGroup G(preset("DAinf"));
  auto B = oracle::Ball::from_engine(G, static_cast<int>(state.range(0)));
  auto chi = harmonic::sphere_indicator(B, 1);
  for (auto _ : state) benchmark::DoNotOptimize(harmonic::operator_norm_estimates(G, chi, B, 20).back().estimate);
}
BENCHMARK(BM_ConvolutionPowerIteration)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
