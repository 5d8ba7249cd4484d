#include "cremona/geometry.hpp"
#include "cremona/spectra.hpp"
#include "cremona/weyl.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace cremona;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_charpoly(benchmark::State& state) {
    const QMatrix m = m_sigma(Variant::spatial9).div_matrix();
    for (auto _ : state) benchmark::DoNotOptimize(charpoly(m, mode(state)));
}

void BM_degeneracy(benchmark::State& state) {
    const Configuration config = random_configuration(signature_of(Variant::spatial9), 7);
    for (auto _ : state) benchmark::DoNotOptimize(degeneracy_report(config, mode(state)));
}

void BM_word_checks(benchmark::State& state) {
    const BlowupSignature sig = signature_of(Variant::spatial9);
    std::mt19937_64 gen(11);
    std::vector<LatticeMap> maps;
    for (int i = 0; i < 64; ++i) maps.push_back(map_of(sig, random_word(sig, gen, 8)));
    for (auto _ : state)
        benchmark::DoNotOptimize(map_indices(maps.size(), [&](std::size_t i) { return maps[i].is_adjoint(); }, mode(state)));
}

} // namespace

BENCHMARK(BM_charpoly)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_degeneracy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_word_checks)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
