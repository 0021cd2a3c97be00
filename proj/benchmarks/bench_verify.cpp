#include <benchmark/benchmark.h>

#include <map>

#include "acute/doubling.hpp"
#include "acute/verify.hpp"

namespace {

const acute::PointSet& constructed(std::size_t d) {
  static std::map<std::size_t, acute::PointSet> cache;
  auto it = cache.find(d);
  if (it == cache.end())
    it = cache.emplace(d, acute::construct(d).first).first;
  return it->second;
}

void BM_ConstructDim(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto out = acute::construct(d);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_ConstructDim)->Arg(6)->Arg(8)->Arg(10)->Arg(12)->Arg(14)
    ->Unit(benchmark::kMillisecond);

void BM_VerifyExact(benchmark::State& state) {
  const auto& ps = constructed(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto rep = acute::verify_acute(ps, acute::VerifyMode::exact);
    benchmark::DoNotOptimize(rep);
  }
  state.SetLabel("n=" + std::to_string(ps.size()));
}
BENCHMARK(BM_VerifyExact)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_VerifyExactSingleThread(benchmark::State& state) {
  const auto& ps = constructed(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto rep = acute::verify_acute(ps, acute::VerifyMode::exact, 1e-9, 1);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_VerifyExactSingleThread)->Arg(6)->Arg(8)->Arg(10)
    ->Unit(benchmark::kMillisecond);

void BM_VerifyFloat(benchmark::State& state) {
  const auto& ps = constructed(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto rep = acute::verify_acute(ps, acute::VerifyMode::floating);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_VerifyFloat)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
