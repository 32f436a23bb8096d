#include <benchmark/benchmark.h>

#include <vector>

#include "l3col/classify.hpp"
#include "l3col/families.hpp"
#include "l3col/generate.hpp"
#include "l3col/patterns.hpp"
#include "l3col/propagation.hpp"
#include "l3col/solver.hpp"
#include "l3col/twosat.hpp"

using namespace l3col;

namespace {

Graph sparse_graph(int n, std::size_t m, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<Edge> edges;
  while (edges.size() < m) {
    const int u = pick(rng), v = pick(rng);
    if (u != v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

GraphClass class_arg(int64_t i) {
  constexpr GraphClass all[] = {GraphClass::C5Free, GraphClass::C6Free, GraphClass::C4C7Free, GraphClass::C4C8Free,
                                GraphClass::C4C9Free};
  return all[i];
}

}  // namespace

static void BM_TwoList(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const Graph g = sparse_graph(n, 2 * static_cast<std::size_t>(n), rng);
  const ListAssignment L = random_small_lists(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(solve_2list(g, L));
  state.SetComplexityN(n);
}
BENCHMARK(BM_TwoList)->RangeMultiplier(2)->Range(1 << 10, 1 << 17)->Complexity(benchmark::oN)->Unit(benchmark::kMicrosecond);

static void BM_Propagate(benchmark::State& state) {
  const GraphClass c = class_arg(state.range(0));
  const int n = static_cast<int>(state.range(1));
  std::vector<Instance> corpus;
  for (std::uint64_t s = 0; s < 16; ++s) corpus.push_back(gen_class_instance(c, n, s));
  const RuleSet rules = RuleSet::parse("all");
  std::size_t i = 0;
  for (auto _ : state) {
    const Instance& inst = corpus[i++ % corpus.size()];
    benchmark::DoNotOptimize(propagate(inst.graph, inst.lists, rules));
  }
  state.SetLabel(std::string(class_name(c)));
}
BENCHMARK(BM_Propagate)->ArgsProduct({{0, 1, 2, 3, 4}, {12, 24, 48}})->Unit(benchmark::kMicrosecond);

static void BM_InducedCycles(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Graph g = families::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_induced_cycles(g, k));
}
BENCHMARK(BM_InducedCycles)->DenseRange(5, 9)->Unit(benchmark::kMicrosecond);

static void BM_InducedCyclesHoffmanSingleton(benchmark::State& state) {
  const Graph g = families::hoffman_singleton();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_induced_cycles(g, 5));
}
BENCHMARK(BM_InducedCyclesHoffmanSingleton)->Unit(benchmark::kMillisecond);

static void BM_Classify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = gen_class_graph(GraphClass::C4C8Free, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_Classify)->Arg(10)->Arg(14)->Arg(20)->Unit(benchmark::kMicrosecond);

static void BM_Dispatch(benchmark::State& state) {
  const GraphClass c = class_arg(state.range(0));
  const int n = static_cast<int>(state.range(1));
  std::vector<Instance> corpus;
  for (std::uint64_t s = 0; s < 16; ++s) corpus.push_back(gen_class_instance(c, n, 100 + s));
  std::size_t i = 0;
  for (auto _ : state) {
    const Instance& inst = corpus[i++ % corpus.size()];
    benchmark::DoNotOptimize(dispatch_solve(inst.graph, inst.lists));
  }
  state.SetLabel(std::string(class_name(c)));
}
BENCHMARK(BM_Dispatch)->ArgsProduct({{0, 1, 2, 3, 4}, {12, 24}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Dispatch)->ArgsProduct({{0, 1, 2}, {200}})->Unit(benchmark::kMillisecond);

static void BM_ExactHoffmanSingleton(benchmark::State& state) {
  const Graph g = families::hoffman_singleton();
  const ListAssignment L = full_lists(g.order());
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(g, L));
}
BENCHMARK(BM_ExactHoffmanSingleton)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
