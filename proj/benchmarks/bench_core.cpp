#include <benchmark/benchmark.h>

#include "grouplen/chain.hpp"
#include "grouplen/gmodule.hpp"
#include "grouplen/radicals.hpp"
#include "grouplen/structure.hpp"
#include "grouplen/subgroups.hpp"

using namespace grouplen;

namespace {

PermutationGroup symmetric(std::size_t n) {
    std::vector<point_t> cycle(n), swap01(n);
    for (std::size_t i = 0; i < n; ++i) {
        cycle[i] = static_cast<point_t>((i + 1) % n);
        swap01[i] = static_cast<point_t>(i);
    }
    swap01[0] = 1;
    swap01[1] = 0;
    return PermutationGroup(
        n, {Permutation::from_images(cycle), Permutation::from_images(swap01)});
}

void bm_stabilizer_chain_order(benchmark::State& state) {
    for (auto _ : state) {
        // Fresh copies so each iteration rebuilds the chain.
        PermutationGroup s6(6, symmetric(6).generators());
        benchmark::DoNotOptimize(s6.order());
    }
}
BENCHMARK(bm_stabilizer_chain_order);

void bm_conjugacy_classes(benchmark::State& state) {
    const PermutationGroup s5 = symmetric(5);
    const Config cfg = Config::defaults();
    for (auto _ : state) {
        benchmark::DoNotOptimize(conjugacy_classes(s5, cfg).size());
    }
}
BENCHMARK(bm_conjugacy_classes);

void bm_subgroup_lattice(benchmark::State& state) {
    const PermutationGroup s4 = symmetric(4);
    const Config cfg = Config::defaults();
    for (auto _ : state) {
        benchmark::DoNotOptimize(all_subgroups(s4, cfg).size());
    }
}
BENCHMARK(bm_subgroup_lattice);

void bm_fitting_height(benchmark::State& state) {
    const PermutationGroup s4 = symmetric(4);
    const Config cfg = Config::defaults();
    for (auto _ : state) {
        benchmark::DoNotOptimize(fitting_height(s4, cfg).value());
    }
}
BENCHMARK(bm_fitting_height);

void bm_regular_module_chop(benchmark::State& state) {
    const PermutationGroup s3 = symmetric(3);
    const Config cfg = Config::defaults();
    const GModule reg = regular_module(s3, 5, cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(composition_factors(reg, cfg).size());
    }
}
BENCHMARK(bm_regular_module_chop);

void bm_witness_chain_one_stage(benchmark::State& state) {
    const Config cfg = Config::defaults();
    const SigmaPartition sigma = SigmaPartition::singletons();
    for (auto _ : state) {
        benchmark::DoNotOptimize(counterexample_chain(sigma, 2, 1, cfg).stages.size());
    }
}
BENCHMARK(bm_witness_chain_one_stage);

}  // namespace

BENCHMARK_MAIN();
