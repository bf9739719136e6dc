#include <benchmark/benchmark.h>

#include <random>

#include "lamina/action.hpp"
#include "lamina/generate.hpp"

using namespace lamina;

namespace {

const Alphabet kRank2(2);

std::vector<Letter> random_raw(std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> letter(0, 3);
  std::vector<Letter> out(len);
  for (auto& x : out) x = static_cast<Letter>(letter(rng));
  return out;
}

Word random_reduced(std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> letter(0, 3);
  std::vector<Letter> out;
  while (static_cast<int>(out.size()) < len) {
    const Letter x = static_cast<Letter>(letter(rng));
    if (!out.empty() && x == inverse_letter(out.back())) continue;
    out.push_back(x);
  }
  return Word::from_letters(std::move(out));
}

void BM_Reduce(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto raw = random_raw(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Word::reduced(raw));
}
BENCHMARK(BM_Reduce)->Arg(64)->Arg(1024);

void BM_Concat(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const Word u = random_reduced(rng, static_cast<int>(state.range(0)));
  const Word v = random_reduced(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(concat(u, v));
}
BENCHMARK(BM_Concat)->Arg(64)->Arg(1024);

void BM_Rational(benchmark::State& state) {
  const Word w = parse_word(kRank2, "aabab");
  for (auto _ : state)
    benchmark::DoNotOptimize(rational(kRank2, w, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Rational)->Arg(9)->Arg(64)->Arg(256);

void BM_Chop(benchmark::State& state) {
  const FactorLanguage language =
      rational(kRank2, parse_word(kRank2, "aabab"), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chop(language, 1));
}
BENCHMARK(BM_Chop)->Arg(9)->Arg(64);

void BM_EqualAt(benchmark::State& state) {
  const FactorLanguage a = rational(kRank2, parse_word(kRank2, "aabab"), 64);
  const FactorLanguage b = rational(kRank2, parse_word(kRank2, "ababa"), 64);
  for (auto _ : state) benchmark::DoNotOptimize(equal_at(a, b, 64));
}
BENCHMARK(BM_EqualAt);

void BM_Act(benchmark::State& state) {
  const Automorphism alpha(
      Endomorphism(kRank2, {parse_word(kRank2, "ab"), parse_word(kRank2, "b")}),
      Endomorphism(kRank2, {parse_word(kRank2, "aB"), parse_word(kRank2, "b")}));
  const int margin = action_chop_margin(alpha);
  const int n = static_cast<int>(state.range(0));
  const FactorLanguage source = rational(
      kRank2, parse_word(kRank2, "a"), act_required_horizon(alpha, n, margin));
  for (auto _ : state)
    benchmark::DoNotOptimize(act(alpha, source, n, margin));
}
BENCHMARK(BM_Act)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
