#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>

#include "rouquier/dataset.hpp"
#include "rouquier/partition.hpp"
#include "rouquier/specialization.hpp"
#include "rouquier/verifier.hpp"

using namespace rouquier;

namespace {

const SchurModel& g4_theta() {
    static const GroupDataset ds = load_dataset(std::filesystem::path(ROUQUIER_DATA_DIR) / "g4_theta.json");
    return ds.models.at(0);
}

void BM_ComputeAA(benchmark::State& state) {
    const auto k = state.range(0);
    const Specialization s({k, 0, -k});
    for (auto _ : state) benchmark::DoNotOptimize(compute_aA(g4_theta(), s));
}
BENCHMARK(BM_ComputeAA)->Arg(1)->Arg(10)->Arg(100);

void BM_ExpandThenValDeg(benchmark::State& state) {
    const auto k = state.range(0);
    const Specialization s({k, 0, -k});
    for (auto _ : state) benchmark::DoNotOptimize(val_deg(expand(g4_theta(), s)));
}
BENCHMARK(BM_ExpandThenValDeg)->Arg(1)->Arg(10)->Arg(100);

void BM_CompareOnHyperplane(benchmark::State& state) {
    const auto fd = factor_degrees(g4_theta());
    const Hyperplane h = make_hyperplane(Monomial{{2, -1, -1}}, VarIndex({{"C", 3}}));
    for (auto _ : state) benchmark::DoNotOptimize(compare(fd, fd, &h));
}
BENCHMARK(BM_CompareOnHyperplane);

void BM_Join(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    std::vector<Partition> ps;
    for (int i = 0; i < 8; ++i) {
        std::vector<std::vector<std::size_t>> blocks(n / 2 + 1);
        for (std::size_t e = 0; e < n; ++e) blocks[rng() % blocks.size()].push_back(e);
        std::erase_if(blocks, [](const auto& b) { return b.empty(); });
        ps.emplace_back(n, blocks);
    }
    for (auto _ : state) benchmark::DoNotOptimize(join(ps));
}
BENCHMARK(BM_Join)->Arg(16)->Arg(256)->Arg(4096);

}  // namespace
BENCHMARK_MAIN();
