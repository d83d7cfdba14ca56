// Serial reference vs OpenMP for the three kernels. Arg(0) is serial,
// Arg(1) parallel; GLJ_NUM_THREADS sets the thread count.

#include "glj/permcat.hpp"
#include "glj/simplicial.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace glj;

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

// Same category as the window's but without its table, composing by
// decode/compose/rank on every call.
PresentedCategory untabulated(const PermutativeWindow& w) {
  const auto& c = w.category();
  PresentedCategory::Builder b;
  b.reserve(c.object_count(), c.morphism_count());
  for (ObjId x = 0; x < c.object_count(); ++x) b.add_object();
  for (MorId f = 0; f < c.morphism_count(); ++f) b.add_morphism(c.dom(f), c.cod(f));
  for (ObjId x = 0; x < c.object_count(); ++x) b.set_identity(x, c.identity(x));
  b.set_composer([&w](MorId g, MorId f) { return w.morphism_id(k_compose(w.kind(), w.morphism(g), w.morphism(f))); });
  return std::move(b).build();
}

void BM_CompositionTable(benchmark::State& state) {
  const PermutativeWindow w(IndexKind::J, 3, 5);
  for (auto _ : state) {
    state.PauseTiming();
    auto c = untabulated(w);
    state.ResumeTiming();
    c.materialize(exec_of(state));
    benchmark::DoNotOptimize(c.compose(c.identity(0), c.identity(0)));
  }
  state.counters["pairs"] = double(w.category().composable_pairs());
}
BENCHMARK(BM_CompositionTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Nerve(benchmark::State& state) {
  const PermutativeWindow w(IndexKind::J, 3, 5);
  std::uint64_t top = 0;
  for (auto _ : state) {
    auto nv = nerve(w.category(), 2, exec_of(state));
    top = nv.sset.count(2);
    benchmark::DoNotOptimize(top);
  }
  state.counters["2-simplices"] = double(top);
}
BENCHMARK(BM_Nerve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Boundary(benchmark::State& state) {
  const PermutativeWindow w(IndexKind::J, 3, 5);
  const auto nv = nerve(w.category(), 2);
  for (auto _ : state) {
    auto d = boundary_matrix(nv.sset, 2, exec_of(state));
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_Boundary)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
