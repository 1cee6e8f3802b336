// Copyright 2026 The jcstrong Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP batch kernels.

#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "jcs/algebra.hpp"
#include "jcs/dynamics.hpp"
#include "jcs/hamiltonian.hpp"
#include "jcs/kernels.hpp"

namespace {

using jcs::AlgebraKind;
using jcs::cplx;

std::vector<cplx> disk_points(int count) {
  std::mt19937 gen(7u);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cplx> out;
  for (int i = 0; i < count; ++i) out.push_back(std::polar(std::sqrt(u(gen)), 6.283185307179586 * u(gen)));
  return out;
}

std::vector<jcs::ModelParams> grid(int count) {
  std::vector<jcs::ModelParams> out;
  for (int i = 0; i < count; ++i) {
    jcs::ModelParams p;
    p.kind = AlgebraKind::SU11K;
    p.spin = 0.75;
    p.omega = 1.0;
    p.delta = 0.01;
    p.g = 0.45 * (i + 1) / count;
    out.push_back(p);
  }
  return out;
}

template <bool Parallel>
void BM_ElementTable(benchmark::State& state) {
  const int nmax = static_cast<int>(state.range(0));
  const cplx z(0.3, 0.4);
  for (auto _ : state) {
    auto t = Parallel ? jcs::element_table(AlgebraKind::SU11K, 1.0, z, nmax)
                      : jcs::element_table_serial(AlgebraKind::SU11K, 1.0, z, nmax);
    benchmark::DoNotOptimize(t.data());
  }
  state.SetItemsProcessed(state.iterations() * (nmax + 1) * (nmax + 1));
}

template <bool Parallel>
void BM_OracleSweep(benchmark::State& state) {
  const auto zs = disk_points(static_cast<int>(state.range(0)));
  const auto rep = jcs::build_rep(AlgebraKind::HeisenbergN, 0.5, 60);
  for (auto _ : state) {
    auto r = Parallel ? jcs::oracle_sweep(rep, zs, 10) : jcs::oracle_sweep_serial(rep, zs, 10);
    benchmark::DoNotOptimize(r.max_error);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(zs.size()));
}

template <bool Parallel>
void BM_RabiSweep(benchmark::State& state) {
  const auto points = grid(static_cast<int>(state.range(0)));
  const auto pair = jcs::level_pair(1, 4);
  for (auto _ : state) {
    auto r = Parallel ? jcs::rabi_sweep(points, pair) : jcs::rabi_sweep_serial(points, pair);
    benchmark::DoNotOptimize(r.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(points.size()));
}

}  // namespace

BENCHMARK(BM_ElementTable<false>)->Name("element_table/serial")->Arg(20)->Arg(60);
BENCHMARK(BM_ElementTable<true>)->Name("element_table/openmp")->Arg(20)->Arg(60)->UseRealTime();
BENCHMARK(BM_OracleSweep<false>)->Name("oracle_sweep/serial")->Arg(16)->Arg(64);
BENCHMARK(BM_OracleSweep<true>)->Name("oracle_sweep/openmp")->Arg(16)->Arg(64)->UseRealTime();
BENCHMARK(BM_RabiSweep<false>)->Name("rabi_sweep/serial")->Arg(256)->Arg(4096);
BENCHMARK(BM_RabiSweep<true>)->Name("rabi_sweep/openmp")->Arg(256)->Arg(4096)->UseRealTime();

BENCHMARK_MAIN();
