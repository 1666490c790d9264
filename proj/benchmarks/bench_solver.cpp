#include <benchmark/benchmark.h>

#include "sh1d/config.hpp"
#include "sh1d/limiter.hpp"
#include "sh1d/runner.hpp"

namespace {

sh1d::StepDriver make_driver(int n_cells) {
    sh1d::RunConfig cfg = sh1d::case_preset(1);
    cfg.n_cells = n_cells;
    sh1d::Mesh mesh = sh1d::Mesh::uniform(cfg.domain_length, cfg.n_cells);
    sh1d::StepDriver driver(mesh, cfg.physical, cfg.stopping, cfg.limiter);
    driver.initialize(
        sh1d::project_initial(sh1d::make_initial_profile(cfg.initial), mesh));
    return driver;
}

void BM_Rhs(benchmark::State& state) {
    sh1d::StepDriver driver = make_driver(static_cast<int>(state.range(0)));
    sh1d::ModalField rates(driver.field().n_cells());
    for (auto _ : state) {
        sh1d::rhs(driver.field(), driver.flags(), driver.context(), rates);
        benchmark::DoNotOptimize(rates.h_data().data());
    }
}
BENCHMARK(BM_Rhs)->Arg(256)->Arg(1024);

void BM_Rk3Step(benchmark::State& state) {
    sh1d::StepDriver driver = make_driver(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        driver.advance(1e-3);
        benchmark::DoNotOptimize(driver.field().h_data().data());
    }
}
BENCHMARK(BM_Rk3Step)->Arg(256)->Arg(1024);

void BM_LimitField(benchmark::State& state) {
    sh1d::StepDriver driver = make_driver(static_cast<int>(state.range(0)));
    sh1d::ModalField field = driver.field();
    sh1d::LimiterParams params;
    for (auto _ : state) {
        sh1d::limit_field(field, params);
        benchmark::DoNotOptimize(field.h_data().data());
    }
}
BENCHMARK(BM_LimitField)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
