#include <benchmark/benchmark.h>

#include "eqlines/catalog/catalog.hpp"
#include "eqlines/construct/generators.hpp"
#include "eqlines/construct/plan.hpp"
#include "eqlines/frames/verify.hpp"

using eqlines::catalog::Catalog;
using eqlines::exact::make_rational;
using eqlines::exact::Surd;
namespace construct = eqlines::construct;
namespace frames = eqlines::frames;

static void BM_SurdMultiply(benchmark::State& state) {
  const Surd a = Surd::term(make_rational(1, 3), 3) + Surd::term(make_rational(2, 5), 10) + Surd(make_rational(1, 7));
  const Surd b = Surd::term(make_rational(-3, 4), 2) + Surd::term(make_rational(1, 6), 15);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SurdMultiply);

static void BM_SurdSign(benchmark::State& state) {
  const Surd near = Surd(make_rational(665857, 470832)) - Surd::sqrt(2);
  for (auto _ : state) benchmark::DoNotOptimize(near.sign());
}
BENCHMARK(BM_SurdSign);

static void BM_VerifyCatalogEntry(benchmark::State& state, const char* id) {
  const auto& ls = Catalog::builtin().get(id).effective();
  for (auto _ : state) benchmark::DoNotOptimize(frames::verify_equiangular(ls));
}
BENCHMARK_CAPTURE(BM_VerifyCatalogEntry, fano_28x7, "III.B.11")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyCatalogEntry, lines_36x15, "IV.B.3")->Unit(benchmark::kMillisecond);

static void BM_Rank(benchmark::State& state) {
  const auto ls = construct::two_angle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(frames::rank(ls));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_VerifyAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Catalog::builtin().verify_all());
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

static void BM_GenerateOneThird(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(construct::family_one_third(n));
}
BENCHMARK(BM_GenerateOneThird)->Arg(10)->Arg(50);

static void BM_CirculantSquare(benchmark::State& state) {
  const auto u = construct::circ_sa_n(static_cast<std::size_t>(state.range(0)));
  frames::Matrix a(u.m(), u.n());
  for (std::size_t i = 0; i < u.m(); ++i)
    for (std::size_t j = 0; j < u.n(); ++j) a(i, j) = u.at(i, j);
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_CirculantSquare)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_ComposeFano(benchmark::State& state) {
  const auto& cat = Catalog::builtin();
  const auto plan = *cat.builtin_plan("III.B.11");
  const auto resolve = cat.resolver();
  for (auto _ : state) benchmark::DoNotOptimize(construct::apply_plan(plan, resolve));
}
BENCHMARK(BM_ComposeFano);

BENCHMARK_MAIN();
