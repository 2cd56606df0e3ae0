// OpenMP tabulate() against the serial reference on the same grid.
//
//   OMP_NUM_THREADS=4 ./bench_tabulate --benchmark_counters_tabular=true

#include <benchmark/benchmark.h>
#include <omp.h>

#include "phentropy/table.hpp"

using namespace phentropy;

namespace {

TableSpec grid(TableMeasure m, std::optional<double> q, Space space) {
  TableSpec s;
  s.measure = m;
  s.q = q;
  s.space = space;
  s.molecules = {"Na2", "Cl2", "O2+", "N2+", "NO+"};
  s.n_values.clear();
  for (int n = 0; n <= 10; ++n) s.n_values.push_back(n);
  s.ell_values = {0, 1, 2, 3};
  return s;
}

const TableSpec& spec_for(int which) {
  static const TableSpec specs[] = {
      grid(TableMeasure::Shannon, std::nullopt, Space::Position),
      grid(TableMeasure::Tsallis, 2.0 / 3.0, Space::Momentum),
      grid(TableMeasure::RenyiRatio, 2.0, Space::Position),
  };
  return specs[which];
}

const char* label(int which) {
  static const char* names[] = {"shannon", "tsallis_2/3", "renyi_ratio"};
  return names[which];
}

void BM_Serial(benchmark::State& state) {
  const auto& spec = spec_for(static_cast<int>(state.range(0)));
  const auto mols = builtin_molecules();
  for (auto _ : state) benchmark::DoNotOptimize(tabulate_serial(spec, mols));
  state.SetLabel(label(static_cast<int>(state.range(0))));
  state.counters["cells"] = static_cast<double>(spec.molecules.size() * spec.n_values.size() * spec.ell_values.size());
}

void BM_OpenMP(benchmark::State& state) {
  const auto& spec = spec_for(static_cast<int>(state.range(0)));
  const auto mols = builtin_molecules();
  for (auto _ : state) benchmark::DoNotOptimize(tabulate(spec, mols));
  state.SetLabel(label(static_cast<int>(state.range(0))));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_Serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OpenMP)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
