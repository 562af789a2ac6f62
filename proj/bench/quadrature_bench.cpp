#include <benchmark/benchmark.h>

#include "nilcone/oracle.hpp"

namespace {

using namespace nilcone::oracle;

Execution execution(const benchmark::State& state) {
    return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void BM_InvarianceReport(benchmark::State& state) {
    const TestFunction f = TestFunction::gaussian(1.0, Point3{0.0, 1.0, 0.0});
    const QuadratureGrid grid{6.0, static_cast<int>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            invariance_report(2, Direction::H, f, grid, LieVariant::standard, execution(state)).residual_norm);
    }
    state.SetLabel(state.range(1) == 0 ? "serial" : "parallel");
}

void BM_ObstructionReport(benchmark::State& state) {
    const TestFunction f = TestFunction::gaussian(1.0, Point3{0.0, 1.0, 0.0});
    const QuadratureGrid grid{6.0, static_cast<int>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            obstruction_report(3, f, grid, SectionVariant::equivariant, execution(state)).norm);
    }
    state.SetLabel(state.range(1) == 0 ? "serial" : "parallel");
}

BENCHMARK(BM_InvarianceReport)->ArgsProduct({{64, 128, 256}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ObstructionReport)->ArgsProduct({{64, 128, 256}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
