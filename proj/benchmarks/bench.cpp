#include <benchmark/benchmark.h>

#include <random>

#include "gpv/braid.hpp"
#include "gpv/projection.hpp"
#include "gpv/words.hpp"

using namespace gpv;

static void BM_Alexander(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto knot = braid_closure_long_knot(random_knot_braid(rng, 4, static_cast<int>(state.range(0))), 4);
  const auto pd = planar_from_gauss(*knot);
  for (auto _ : state) benchmark::DoNotOptimize(alexander(pd));
  state.SetLabel(std::to_string(pd.crossings.size()) + " crossings");
}
BENCHMARK(BM_Alexander)->Arg(8)->Arg(16)->Arg(32);

static void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Enumerate)->DenseRange(1, 3);

static void BM_SInv(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto d = random_diagram(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(s_inv(d));
}
BENCHMARK(BM_SInv)->Arg(4)->Arg(8)->Arg(12);

static void BM_Cap(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto t = cut_tree(random_diagram(rng, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(cap(t));
}
BENCHMARK(BM_Cap)->Arg(3)->Arg(6)->Arg(12);

static void BM_OmegaTable(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(omega_table(c2_invariant(), 2, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_OmegaTable)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Vanishing3(benchmark::State& state) {
  const auto all = enumerate(3);
  for (auto _ : state) {
    OmegaEvaluator ev(c2_invariant(), 2);
    Coeff total = 0;
    for (const auto& d : all) total += ev.omega(d);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_Vanishing3)->Unit(benchmark::kMillisecond);

static void BM_WordTable(benchmark::State& state) {
  const auto ab = Alphabet::from_names({"a", "b"});
  const auto nu = product_invariant(exp_sum_invariant(ab, "a"), exp_sum_invariant(ab, "b"));
  for (auto _ : state) benchmark::DoNotOptimize(omega_word_table(nu, 2, ab));
}
BENCHMARK(BM_WordTable);

BENCHMARK_MAIN();
