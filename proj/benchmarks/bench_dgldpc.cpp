#include <benchmark/benchmark.h>

#include "dgldpc/codeprops.hpp"
#include "dgldpc/de.hpp"
#include "dgldpc/ensemble.hpp"
#include "dgldpc/exit.hpp"
#include "dgldpc/stability.hpp"

using namespace dgldpc;

namespace {

const char* const kHamming74 = "1000110\n0100101\n0010011\n0001111";

// Extended Golay (24,12) generator.
const char* const kGolay24 =
    "100000000000110111000101\n"
    "010000000000101110001011\n"
    "001000000000011100010111\n"
    "000100000000111000101101\n"
    "000010000000110001011011\n"
    "000001000000100010110111\n"
    "000000100000000101101111\n"
    "000000010000001011011101\n"
    "000000001000010110111001\n"
    "000000000100101101110001\n"
    "000000000010011011100011\n"
    "000000000001111111111110";

ValidatedEnsemble mixed_ensemble() {
    return validate(Ensemble{
        {{Repetition{2}, 0.3}, {GenericCode{BinaryMatrix::parse("101\n011")}, 0.4}, {Repetition{3}, 0.3}},
        {{SingleParityCheck{6}, 0.6}, {GenericCode{BinaryMatrix::parse(kHamming74)}, 0.4}}});
}

ValidatedEnsemble regular_ensemble() {
    return validate(Ensemble{{{Repetition{3}, 1.0}}, {{SingleParityCheck{6}, 1.0}}});
}

void BM_InfoFunctionsSpc(benchmark::State& state) {
    const auto code = ComponentCode::single_parity_check(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(info_functions(code));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_InfoFunctionsSpc)->DenseRange(8, 20, 4);

void BM_InfoFunctionsGolay(benchmark::State& state) {
    const auto code = ComponentCode::parse(kGolay24);
    for (auto _ : state) benchmark::DoNotOptimize(info_functions(code));
}
BENCHMARK(BM_InfoFunctionsGolay)->Unit(benchmark::kMillisecond);

void BM_SplitInfoFunctionsHamming(benchmark::State& state) {
    const auto code = ComponentCode::parse(kHamming74);
    for (auto _ : state) benchmark::DoNotOptimize(split_info_functions(code));
}
BENCHMARK(BM_SplitInfoFunctionsHamming);

void BM_MinDistance(benchmark::State& state) {
    const auto code = ComponentCode::parse(kGolay24);
    for (auto _ : state) benchmark::DoNotOptimize(min_independent_set_size(code));
}
BENCHMARK(BM_MinDistance)->Unit(benchmark::kMillisecond);

void BM_ExitVnd(benchmark::State& state) {
    const auto ens = mixed_ensemble();
    double p = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(vnd_erasure(ens, p, 0.35));
        p = p < 0.99 ? p + 0.01 : 0.0;
    }
}
BENCHMARK(BM_ExitVnd);

void BM_ExitChart(benchmark::State& state) {
    const auto ens = mixed_ensemble();
    for (auto _ : state) benchmark::DoNotOptimize(sample_exit_chart(ens, 0.35, 101));
}
BENCHMARK(BM_ExitChart)->Unit(benchmark::kMicrosecond);

void BM_StabilityReport(benchmark::State& state) {
    const auto ens = mixed_ensemble();
    for (auto _ : state) benchmark::DoNotOptimize(stability_report(ens));
}
BENCHMARK(BM_StabilityReport);

void BM_DeIterate(benchmark::State& state) {
    const auto ens = mixed_ensemble();
    for (auto _ : state) benchmark::DoNotOptimize(de_iterate(ens, 0.30, 1'000'000, 1e-12));
}
BENCHMARK(BM_DeIterate)->Unit(benchmark::kMicrosecond);

void BM_ThresholdRegular(benchmark::State& state) {
    const auto ens = regular_ensemble();
    for (auto _ : state) benchmark::DoNotOptimize(find_threshold(ens));
}
BENCHMARK(BM_ThresholdRegular)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
