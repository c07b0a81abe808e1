#include <benchmark/benchmark.h>

#include <random>

#include "diagroup/diagram.hpp"
#include "diagroup/rewrite.hpp"

using namespace diagroup;

namespace {

PresentationPtr thompson() {
  return parse_presentation("letters x\nrule x = x x\n");
}

std::vector<Cell> random_cells(Presentation const& p, Letters top,
                               std::size_t count, std::mt19937_64& rng) {
  std::vector<Cell> cells;
  Letters cur = std::move(top);
  while (cells.size() < count) {
    auto apps = rewrite_step(cur, p, Direction::Both);
    if (apps.empty()) {
      break;
    }
    auto const& app = apps[rng() % apps.size()];
    cells.push_back({static_cast<std::uint32_t>(app.position),
                     static_cast<std::uint32_t>(app.relation), app.forward});
    cur = app.result;
  }
  return cells;
}

void BM_canonicalize(benchmark::State& state) {
  auto p = thompson();
  std::mt19937_64 rng(42);
  Word top = p->parse_word("x");
  std::vector<std::vector<Cell>> inputs;
  for (int i = 0; i < 64; ++i) {
    inputs.push_back(
        random_cells(*p, top.letters(), state.range(0), rng));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    auto d = Diagram::make(p, top, inputs[i++ % inputs.size()]);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_canonicalize)->Arg(4)->Arg(8)->Arg(16);

void BM_concat_inverse(benchmark::State& state) {
  auto p = thompson();
  std::mt19937_64 rng(7);
  Word top = p->parse_word("x");
  auto d = Diagram::make(p, top,
                         random_cells(*p, top.letters(), state.range(0), rng));
  for (auto _ : state) {
    auto r = d.concat(d.inverse());
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_concat_inverse)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
