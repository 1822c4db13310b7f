#include <benchmark/benchmark.h>

#include "netrecon/extension.hpp"
#include "netrecon/io.hpp"
#include "netrecon/pipeline.hpp"
#include "netrecon/reconstruct.hpp"
#include "netrecon/simulate.hpp"
#include "netrecon/validity.hpp"

namespace {

using namespace netrecon;

const ExperimentGraph& demo_graph() {
    static ExperimentGraph g = parse_instance_file(NETRECON_INSTANCE_DIR "/demo.exp");
    return g;
}

const ExperimentGraph& extended_graph() {
    static ExperimentGraph g =
        parse_instance_file(NETRECON_INSTANCE_DIR "/demo_extended.exp");
    return g;
}

const RegulatoryStructure& extended_structure() {
    static RegulatoryStructure rs = [] {
        SearchConfig cfg;
        cfg.bounds = compute_bounds(extended_graph());
        auto sols = enumerate_structures_all(extended_graph(), cfg);
        return sols.at(0).structure;
    }();
    return rs;
}

void bm_validate(benchmark::State& state) {
    const ExperimentGraph& g = demo_graph();
    for (auto _ : state) {
        ValidityReport r = validate(g);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(bm_validate);

void bm_bounds(benchmark::State& state) {
    const ExperimentGraph& g = extended_graph();
    for (auto _ : state) {
        Bounds b = compute_bounds(g);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(bm_bounds);

void bm_enumerate_extended(benchmark::State& state) {
    const ExperimentGraph& g = extended_graph();
    SearchConfig cfg;
    cfg.bounds = compute_bounds(g);
    for (auto _ : state) {
        auto sols = enumerate_structures_all(g, cfg);
        benchmark::DoNotOptimize(sols);
    }
}
BENCHMARK(bm_enumerate_extended);

void bm_minimal_extensions(benchmark::State& state) {
    const ExperimentGraph& g = demo_graph();
    for (auto _ : state) {
        ExtensionSearchResult r = minimal_valid_extensions(g, 4);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(bm_minimal_extensions)->Unit(benchmark::kMillisecond);

void bm_solve_demo(benchmark::State& state) {
    const ExperimentGraph& g = demo_graph();
    SolveOptions opts;
    for (auto _ : state) {
        SolveResult r = solve_instance(g, opts);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(bm_solve_demo)->Unit(benchmark::kMillisecond);

void bm_conformal(benchmark::State& state) {
    const ExperimentGraph& g = extended_graph();
    const RegulatoryStructure& rs = extended_structure();
    for (auto _ : state) {
        ConformalityReport r = check_conformal(rs, g);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(bm_conformal);

}  // namespace

BENCHMARK_MAIN();
