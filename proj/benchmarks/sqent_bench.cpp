// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

#include <sqent/fermi_gas.hpp>
#include <sqent/fock_oracle.hpp>
#include <sqent/measures.hpp>
#include <sqent/mode_transform.hpp>

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

namespace {

using namespace sqent;

void BM_ExchangeF(benchmark::State& state) {
    double x = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fermi::exchange_f(x).value());
        x = x < 50.0 ? x + 0.37 : 0.01;
    }
}
BENCHMARK(BM_ExchangeF);

void BM_Concurrence(benchmark::State& state) {
    const DensityMatrix rho = fermi::two_electron_rho(fermi::ExchangeValue(0.9)).normalized();
    for (auto _ : state) {
        benchmark::DoNotOptimize(measures::concurrence(rho));
    }
}
BENCHMARK(BM_Concurrence);

void BM_NElectronRho(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    std::vector<fermi::Vec3> pos(static_cast<std::size_t>(state.range(0)));
    for (auto& p : pos) {
        p = {u(rng), u(rng), u(rng)};
    }
    const auto geometry = fermi::ExchangeGeometry::dimensionless(pos);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fermi::n_electron_rho(geometry));
    }
}
BENCHMARK(BM_NElectronRho)->DenseRange(2, 6);

void BM_NumericVacuum(benchmark::State& state) {
    const auto ops = fock::build_ladder(2, static_cast<int>(state.range(0)));
    const auto map = modes::BogoliubovMap::two_mode_squeeze(0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fock::numeric_vacuum(ops, map));
    }
}
BENCHMARK(BM_NumericVacuum)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
