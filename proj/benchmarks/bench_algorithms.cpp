#include <benchmark/benchmark.h>

#include <map>

#include "geoinsert/consistency.hpp"
#include "geoinsert/decide.hpp"
#include "geoinsert/fpt.hpp"
#include "geoinsert/gsp_faces.hpp"
#include "geoinsert/reroute.hpp"
#include "geoinsert/shortest_paths.hpp"
#include "geoinsert/testkit.hpp"

using namespace geoinsert;

namespace {

constexpr std::uint64_t kSeed = 11;

// generation is far slower than the algorithms, so each size is built once
const Instance& planar(int n, int delta) {
  static std::map<std::pair<int, int>, Instance> cache;
  auto it = cache.find({n, delta});
  if (it == cache.end()) it = cache.emplace(std::make_pair(n, delta), testkit::gen_random_planar(n, delta, kSeed)).first;
  return it->second;
}

void BM_ExtendedDual(benchmark::State& state) {
  const Instance& inst = planar(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(inst.dual());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExtendedDual)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_ShortestPathDag(benchmark::State& state) {
  const auto ed = planar(static_cast<int>(state.range(0)), 5).dual();
  for (auto _ : state) benchmark::DoNotOptimize(build_gsp(ed));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ShortestPathDag)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_IsConsistent(benchmark::State& state) {
  const auto ed = planar(static_cast<int>(state.range(0)), 5).dual();
  const DualPath p = bfs_shortest(ed);
  for (auto _ : state) benchmark::DoNotOptimize(is_consistent(ed, p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IsConsistent)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_RerouteDegree5(benchmark::State& state) {
  const auto ed = planar(static_cast<int>(state.range(0)), 5).dual();
  for (auto _ : state) benchmark::DoNotOptimize(reroute_degree5(ed));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RerouteDegree5)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_ApproxDelta(benchmark::State& state) {
  const auto ed = planar(static_cast<int>(state.range(0)), 8).dual();
  for (auto _ : state) benchmark::DoNotOptimize(approx_delta(ed));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApproxDelta)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_DecideFig2(benchmark::State& state) {
  const auto ed = testkit::gen_fig2(static_cast<int>(state.range(0))).dual();
  for (auto _ : state) benchmark::DoNotOptimize(decide(ed));
}
BENCHMARK(BM_DecideFig2)->DenseRange(1, 4);

void BM_DecideRandom(benchmark::State& state) {
  // first seed whose instance has a common face, so decide does not throw
  for (std::uint64_t seed = 1;; ++seed) {
    const auto ed = testkit::gen_random_planar(static_cast<int>(state.range(0)), 6, seed).dual();
    if (!check_common_face(ed, build_gsp(ed)).found) continue;
    for (auto _ : state) benchmark::DoNotOptimize(decide(ed));
    break;
  }
}
BENCHMARK(BM_DecideRandom)->RangeMultiplier(2)->Range(16, 128);

void BM_FptSearch(benchmark::State& state) {
  const auto ed = testkit::gen_fig2(1).dual();
  const int k = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(fpt_search(ed, {k, 0.05, ++seed, 1}));
}
BENCHMARK(BM_FptSearch)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
