#include <benchmark/benchmark.h>

#include "diagroup/rewrite.hpp"

using namespace diagroup;

namespace {

void BM_normal_form(benchmark::State& state) {
  auto p = parse_presentation(
      "letters a b\nrule a a a = a\nrule a a a = a a\n"
      "rule b a a a = a a a b\n");
  NormalFormer nf(p);
  Letters w;
  for (int i = 0; i < state.range(0); ++i) {
    w.push_back(i % 3 == 0 ? 1 : 0);
  }
  Word word(w);
  for (auto _ : state) {
    auto r = nf.reduce(word);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_normal_form)->Arg(8)->Arg(32)->Arg(128);

void BM_enumerate_class(benchmark::State& state) {
  auto p = parse_presentation(
      "letters a b c\nrule a = b\nrule b = c\nrule c = a\n");
  Letters w(state.range(0), 0);
  for (auto _ : state) {
    auto cls = enumerate_word_class(w, *p);
    benchmark::DoNotOptimize(cls);
  }
}
BENCHMARK(BM_enumerate_class)->Arg(1)->Arg(2)->Arg(3);

}  // namespace
