// OpenMP CSR kernel vs the serial reference on synthetic networks of 300 and 3000 nodes (100 links per node).

#include <benchmark/benchmark.h>

#include <map>

#include <omp.h>

#include "paradigme/activation.hpp"
#include "support/generators.hpp"

using namespace paradigme;

namespace {

const Network &network(std::size_t nodes) {
    static std::map<std::size_t, Network> cache;
    auto it = cache.find(nodes);
    if (it == cache.end())
        it = cache.emplace(nodes, compile(testing::synthetic_dictionary(nodes, 100, 9), MorphTable::default_english())
                                      .network)
                 .first;
    return it->second;
}

StimulusVector stimulus(const Network &net) {
    StimulusVector e = StimulusVector::zeros(net.size());
    e.values[17] = 0.6;
    e.values[net.size() / 2] = 0.3;
    return e;
}

void BM_ParallelRun(benchmark::State &state) {
    const Network &net = network(static_cast<std::size_t>(state.range(0)));
    omp_set_num_threads(static_cast<int>(state.range(1)));
    const StimulusVector e = stimulus(net);
    for (auto _ : state)
        benchmark::DoNotOptimize(run(net, e, kDefaultSteps));
    state.counters["links"] = static_cast<double>(net.subreferant_link_count());
}

void BM_ReferenceRun(benchmark::State &state) {
    const Network &net = network(static_cast<std::size_t>(state.range(0)));
    const StimulusVector e = stimulus(net);
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::run(net, e, kDefaultSteps));
    state.counters["links"] = static_cast<double>(net.subreferant_link_count());
}

void BM_SingleStep(benchmark::State &state) {
    const Network &net = network(3000);
    omp_set_num_threads(static_cast<int>(state.range(0)));
    const StimulusVector e = stimulus(net);
    const ActivationPattern p = run(net, e, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(step(net, p, e));
}

} // namespace

BENCHMARK(BM_ParallelRun)->ArgsProduct({{300, 3000}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReferenceRun)->Arg(300)->Arg(3000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SingleStep)->Arg(1)->Arg(4)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
