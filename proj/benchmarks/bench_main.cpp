#include <benchmark/benchmark.h>

#include "tiltkit/alcove.hpp"
#include "tiltkit/hecke.hpp"

using namespace tiltkit;

namespace {

std::shared_ptr<const AffineWeylGroup> group(const char* type) {
  return std::make_shared<const AffineWeylGroup>(
      std::make_shared<const RootDatum>(RootDatum::from_type(type, Isogeny::adjoint)));
}

void BM_KLFill(benchmark::State& state) {
  auto g = group("B2");
  const int len = static_cast<int>(state.range(0));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    KazhdanLusztigBasis kl(g, HeckeModuleKind::antispherical, threads);
    kl.ensure(len);
    benchmark::DoNotOptimize(kl.computed_length());
  }
}
BENCHMARK(BM_KLFill)->Args({16, 1})->Args({24, 1})->Args({24, 4})->Unit(benchmark::kMillisecond);

void BM_Bruhat(benchmark::State& state) {
  auto g = group("A2");
  auto elts = g->enumerate(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < elts.size(); i += 7)
      for (const auto& y : elts) n += g->bruhat_leq(elts[i], y);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_Bruhat)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_Freudenthal(benchmark::State& state) {
  auto d = RootDatum::from_type("G2", Isogeny::adjoint);
  const Int k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_character(d, IntVec{k, k}).total_mass());
}
BENCHMARK(BM_Freudenthal)->Arg(2)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Projection(benchmark::State& state) {
  auto g = group("B2");
  for (auto _ : state)
    for (Int x = -40; x <= 40; x += 3)
      for (Int y = -40; y <= 40; y += 3)
        benchmark::DoNotOptimize(project_to_fundamental(*g, IntVec{x, y}, 7, ActionMode::dot).representative);
}
BENCHMARK(BM_Projection)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
