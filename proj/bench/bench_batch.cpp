#include <benchmark/benchmark.h>

#include "progevo/batch.hpp"

using namespace progevo;

namespace {

BatchRequest make_request(benchmark::State const& state)
{
    BatchRequest req;
    req.algo = state.range(0) == 0 ? Algorithm::Gp : Algorithm::Pipe;
    req.cfg.pop_size = 200;
    req.n_runs = 8;
    req.seed_base = 1;
    req.stop_at_first_failure = false;
    return req;
}

void BM_BatchSerial(benchmark::State& state)
{
    auto const spec = ProblemSpec::order(PrimitiveSet(12));
    auto const req = make_request(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(batch_success_serial(spec, req));
    }
}

void BM_BatchParallel(benchmark::State& state)
{
    auto const spec = ProblemSpec::order(PrimitiveSet(12));
    auto const req = make_request(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(batch_success(spec, req));
    }
}

} // namespace

BENCHMARK(BM_BatchSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
