#include <benchmark/benchmark.h>

#include "gsg/canonical.hpp"
#include "gsg/game.hpp"
#include "gsg/order.hpp"
#include "gsg/pickends.hpp"
#include "gsg/stops.hpp"

namespace {

gsg::pickends::Position board(int n) {
  gsg::pickends::Position p;
  for (int i = 0; i < n; ++i) p.pieces.push_back(gsg::Score((i * 7 % 5) - 2));
  return p;
}

// Fresh engine per iteration: construction cost, not cache hits.
void BM_SumOfWaitingMoves(benchmark::State& state) {
  for (auto _ : state) {
    gsg::Engine eng;
    benchmark::DoNotOptimize(eng.sum(eng.hat(static_cast<int>(state.range(0))),
                                     eng.conjugate(eng.hat(static_cast<int>(state.range(0))))));
  }
}
BENCHMARK(BM_SumOfWaitingMoves)->Arg(4)->Arg(8)->Arg(16);

void BM_BoardToValue(benchmark::State& state) {
  for (auto _ : state) {
    gsg::Engine eng;
    benchmark::DoNotOptimize(gsg::pickends::to_game(eng, board(static_cast<int>(state.range(0)))));
  }
}
BENCHMARK(BM_BoardToValue)->Arg(4)->Arg(8)->Arg(12);

void BM_CanonicalBoard(benchmark::State& state) {
  for (auto _ : state) {
    gsg::Engine eng;
    gsg::Game g = gsg::pickends::to_game(eng, board(static_cast<int>(state.range(0))));
    benchmark::DoNotOptimize(gsg::canonical_form(g));
  }
}
BENCHMARK(BM_CanonicalBoard)->Arg(3)->Arg(5)->Arg(7);

void BM_CompareCancellation(benchmark::State& state) {
  for (auto _ : state) {
    gsg::Engine eng;
    gsg::Game s = eng.sum(eng.hat(static_cast<int>(state.range(0))),
                          eng.conjugate(eng.hat(static_cast<int>(state.range(0)))));
    benchmark::DoNotOptimize(gsg::compare(s, eng.number(0)));
  }
}
BENCHMARK(BM_CompareCancellation)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
