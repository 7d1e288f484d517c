// Serial reference against the OpenMP kernels on the largest catalog localities.

#include <benchmark/benchmark.h>

#include "lockit/catalog.hpp"
#include "lockit/normal.hpp"
#include "lockit/products.hpp"

using namespace lockit;

namespace {

const Locality& o4plus2() {
  static const auto built = catalog_localities("o4plus2");
  return *built.front().locality;
}

const Locality& gl32_full() {
  static const auto built = catalog_localities("gl32-full");
  return *built.front().locality;
}

const std::vector<ElementSet>& normals() {
  static const auto n = enumerate_partial_normals(o4plus2(), 18, Exec::serial).normals;
  return n;
}

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_EnumeratePartialNormals(benchmark::State& state) {
  const auto& l = o4plus2();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_partial_normals(l, 18, mode(state)));
  label(state);
}
BENCHMARK(BM_EnumeratePartialNormals)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumeratePartialNormalsGl32(benchmark::State& state) {
  const auto& l = gl32_full();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_partial_normals(l, 18, mode(state)));
  label(state);
}
BENCHMARK(BM_EnumeratePartialNormalsGl32)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_UpMaximalElements(benchmark::State& state) {
  const auto& l = o4plus2();
  const auto& n = normals()[3];
  for (auto _ : state) benchmark::DoNotOptimize(up_maximal_elements(l, n, mode(state)));
  label(state);
}
BENCHMARK(BM_UpMaximalElements)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CheckFrattini(benchmark::State& state) {
  const auto& l = o4plus2();
  const auto& n = normals()[1];
  const auto up = up_maximal_elements(l, n, Exec::serial);
  for (auto _ : state) benchmark::DoNotOptimize(check_frattini(l, n, up, mode(state)));
  label(state);
}
BENCHMARK(BM_CheckFrattini)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CheckProductTheorem(benchmark::State& state) {
  const auto& l = o4plus2();
  const auto& m = normals()[4];
  const auto& n = normals()[5];
  for (auto _ : state) benchmark::DoNotOptimize(check_product_theorem(l, m, n, mode(state)));
  label(state);
}
BENCHMARK(BM_CheckProductTheorem)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
