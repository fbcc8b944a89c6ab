// Parallel kernels against their serial references.  The serial table build
// is left out at order 3125, where it takes tens of seconds.

#include <benchmark/benchmark.h>

#include <numeric>

#include "maxpair/build.hpp"
#include "maxpair/catalog.hpp"
#include "maxpair/engine.hpp"
#include "maxpair/kernels.hpp"
#include "maxpair/lattice.hpp"

using namespace maxpair;

namespace {

const char* const kIds[] = {"sg-162-22", "p4-5", "p5-unique-5"};

const PcPresentation& presentation(int i) {
  static const PcPresentation ps[] = {parse_presentation(*catalog_presentation(kIds[0])),
                                      parse_presentation(*catalog_presentation(kIds[1])),
                                      parse_presentation(*catalog_presentation(kIds[2]))};
  return ps[i];
}

const GroupPtr& group(int i) {
  static const GroupPtr gs[] = {get_group(kIds[0]).group, get_group(kIds[1]).group,
                                get_group(kIds[2]).group};
  return gs[i];
}

void BM_BuildTable(benchmark::State& state) {
  const PcPresentation& p = presentation(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::build_table(p));
  state.SetLabel(kIds[state.range(0)]);
}

void BM_BuildTableSerial(benchmark::State& state) {
  const PcPresentation& p = presentation(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::build_table_serial(p));
  state.SetLabel(kIds[state.range(0)]);
}

// Full triple scan on the order-162 group.
template <bool Parallel>
void BM_Associativity(benchmark::State& state) {
  const Group& g = *group(0);
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  for (auto _ : state) {
    auto r = Parallel ? kernels::find_nonassociative(g.table(), g.order(), all)
                      : kernels::find_nonassociative_serial(g.table(), g.order(), all);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void BM_Regularity(benchmark::State& state) {
  const Group& g = *group(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Parallel ? is_regular(g) : is_regular_serial(g));
  state.SetLabel(kIds[state.range(0)]);
}

// all_subgroups is memoized on the group, so each iteration starts from a
// fresh copy of the table.
void BM_LatticeCyclicExtension(benchmark::State& state) {
  const Group& src = *group(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    state.PauseTiming();
    Group g(src.label(), src.order(), src.table(), src.gens());
    state.ResumeTiming();
    benchmark::DoNotOptimize(all_subgroups(g).size());
  }
  state.SetLabel(kIds[state.range(0)]);
}

void BM_LatticeJoinClosure(benchmark::State& state) {
  const Group& g = *group(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_subgroups_join_closure(g).size());
  state.SetLabel(kIds[state.range(0)]);
}

}  // namespace

BENCHMARK(BM_BuildTable)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildTableSerial)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Associativity<true>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Associativity<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Regularity<true>)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Regularity<false>)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LatticeCyclicExtension)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LatticeJoinClosure)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
