#include "dtx/mhs.hpp"
#include "dtx/oracle.hpp"
#include "dtx/random_tree.hpp"
#include "dtx/tree.hpp"
#include "dtx/tree_io.hpp"
#include "dtx/xplain.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace dtx;

// A full binary tree over `depth` features; every root-leaf path tests all of them.
DecisionTree complete_tree(std::size_t depth) {
    std::vector<Feature> fs;
    for (std::size_t i = 0; i < depth; ++i) fs.push_back({"x" + std::to_string(i + 1), {"0", "1"}});
    TreeBuilder b(FeatureSpace(std::move(fs)), {"0", "1"});
    std::mt19937_64 rng(depth);
    std::vector<NodeId> level;
    for (std::size_t i = 0; i < (std::size_t{1} << depth); ++i) level.push_back(b.leaf(rng() % 2));
    for (std::size_t d = depth; d-- > 0;) {
        std::vector<NodeId> up;
        for (std::size_t i = 0; i < level.size(); i += 2) up.push_back(b.split(d, {level[i], level[i + 1]}));
        level = std::move(up);
    }
    return std::move(b).build(level.front());
}

void BM_RedundancyAllPaths(benchmark::State& state) {
    auto t = complete_tree(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        for (const auto& p : t.paths()) benchmark::DoNotOptimize(is_path_redundant(t, p).redundant);
    state.counters["nodes"] = static_cast<double>(t.node_count());
    state.SetComplexityN(static_cast<benchmark::IterationCount>(t.node_count()));
}
BENCHMARK(BM_RedundancyAllPaths)->DenseRange(4, 14, 2)->Complexity();

void BM_RedundancySinglePath(benchmark::State& state) {
    auto t = complete_tree(static_cast<std::size_t>(state.range(0)));
    const TreePath& p = t.paths()[t.paths().size() / 2];
    for (auto _ : state) benchmark::DoNotOptimize(is_path_redundant(t, p).redundant);
    state.SetComplexityN(static_cast<benchmark::IterationCount>(t.node_count()));
}
BENCHMARK(BM_RedundancySinglePath)->DenseRange(4, 16, 2)->Complexity(benchmark::oN);

void BM_OnePiExplanation(benchmark::State& state) {
    auto t = complete_tree(static_cast<std::size_t>(state.range(0)));
    const TreePath& p = t.paths()[t.paths().size() / 2];
    for (auto _ : state) benchmark::DoNotOptimize(one_pi_explanation_path(t, p).literals.size());
}
BENCHMARK(BM_OnePiExplanation)->DenseRange(4, 14, 2);

void BM_EnumerateRandom(benchmark::State& state) {
    std::mt19937_64 rng(42);
    std::vector<DecisionTree> trees;
    for (int i = 0; i < 50; ++i) trees.push_back(random_tree(rng));
    for (auto _ : state)
        for (const auto& t : trees)
            for (const auto& p : t.paths())
                benchmark::DoNotOptimize(enumerate_pi_explanations(t, p.index, ExplanationMode::PathRestricted).size());
}
BENCHMARK(BM_EnumerateRandom);

void BM_OracleRandom(benchmark::State& state) {
    std::mt19937_64 rng(42);
    std::vector<DecisionTree> trees;
    for (int i = 0; i < 50; ++i) trees.push_back(random_tree(rng));
    for (auto _ : state)
        for (const auto& t : trees) {
            Oracle o(t);
            for (const auto& p : t.paths()) benchmark::DoNotOptimize(o.is_redundant(p));
        }
}
BENCHMARK(BM_OracleRandom);

void BM_RestaurantStats(benchmark::State& state) {
    auto t = load_tree(std::string(DTX_FIXTURE_DIR) + "/russell_norvig.json");
    for (auto _ : state)
        for (const auto& p : t.paths()) benchmark::DoNotOptimize(is_path_redundant(t, p).redundant);
}
BENCHMARK(BM_RestaurantStats);

} // namespace

BENCHMARK_MAIN();
