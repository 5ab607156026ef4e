#include <benchmark/benchmark.h>

#include "minorbit/cohomology.hpp"
#include "minorbit/enveloping.hpp"
#include "minorbit/hikita.hpp"
#include "minorbit/joseph.hpp"
#include "minorbit/weights.hpp"

namespace mo = minorbit;

static void BM_RootSystemE8(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mo::RootSystem::build(mo::LieType::parse("E8")));
}
BENCHMARK(BM_RootSystemE8);

static void BM_FreudenthalD5(benchmark::State& state) {
  auto rs = mo::RootSystem::build(mo::LieType::parse("D5"));
  auto two_theta = mo::weight_add(rs.highest_root(), rs.highest_root());
  for (auto _ : state)
    benchmark::DoNotOptimize(mo::freudenthal_table(rs, two_theta));
}
BENCHMARK(BM_FreudenthalD5);

static void BM_CupTableA6(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mo::an_cup_table(6));
}
BENCHMARK(BM_CupTableA6);

static void BM_BgTableE8(benchmark::State& state) {
  auto rs = mo::RootSystem::build(mo::LieType::parse("E8"));
  for (auto _ : state)
    benchmark::DoNotOptimize(mo::bg_cup_table(rs, mo::group_order(rs.type())));
}
BENCHMARK(BM_BgTableE8);

static void BM_ClosureD4(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mo::build_b_algebra(mo::LieType::parse("D4")));
}
BENCHMARK(BM_ClosureD4);

static void BM_VerifyA3(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mo::verify_isomorphism(mo::LieType::parse("A3")));
}
BENCHMARK(BM_VerifyA3);

BENCHMARK_MAIN();
