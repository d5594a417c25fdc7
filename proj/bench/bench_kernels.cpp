// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "acg/graph.hpp"
#include "acg/lattice.hpp"
#include "acg/walkers.hpp"

using namespace acg;

namespace {

Exec policy(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

const GraphHandle& delta_sl2_7()
{
  static const GraphHandle h = GraphHandle::delta(make_group("sl2:7"), 2);
  return h;
}

void BM_Components(benchmark::State& state)
{
  const GraphHandle& h = delta_sl2_7();
  for (auto _ : state)
    benchmark::DoNotOptimize(components(h, policy(state)).count());
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * h.vertex_count()));
}

void BM_Census(benchmark::State& state)
{
  const auto g = make_group("sl2:7");
  std::vector<Index> alphabet(g->order());
  for (Index i = 0; i < g->order(); ++i)
    alphabet[i] = i;
  const ClosureLattice lattice(g, ClosureLattice::Kind::normal, alphabet, 2);
  const auto target = *lattice.find(alphabet);
  std::vector<std::uint8_t> mask;
  for (auto _ : state)
    benchmark::DoNotOptimize(census(lattice, 2, target, &mask, policy(state)));
}

void BM_Eccentricities(benchmark::State& state)
{
  static const GraphHandle h = GraphHandle::delta(make_group("alt:5"), 2);
  const auto codes = h.vertex_codes();
  const std::vector<Code> sources(codes.begin(), codes.begin() + 64);
  for (auto _ : state)
    benchmark::DoNotOptimize(eccentricities(h, sources, policy(state)));
}

void BM_SampleBatch(benchmark::State& state)
{
  const WalkGroup wg = WalkGroup::symmetric(12);
  const std::vector<GroupElement> init{Permutation::from_cycles("(0 1)(2 3)", 12), Permutation::identity(12)};
  WalkConfig cfg;
  cfg.k = 2;
  cfg.cumulative = true;
  cfg.budget = default_budget(2, 12, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_batch(wg, init, cfg, 2000, 1, policy(state)));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * 2000));
}

} // namespace

BENCHMARK(BM_Components)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Census)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Eccentricities)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
