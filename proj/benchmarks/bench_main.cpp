#include <benchmark/benchmark.h>

#include "igcob/campaigns.hpp"
#include "igcob/cob0.hpp"
#include "igcob/errors.hpp"
#include "igcob/execution.hpp"
#include "igcob/functor_bridge.hpp"
#include "igcob/random_instances.hpp"

namespace {

using namespace igcob;

// A ladder: G holds the rungs' left halves, H the right halves, so every
// boundary path zig-zags through all 2n edges.
std::pair<Graph, Graph> ladder(std::size_t n) {
  std::set<VertexId> vg{"in"}, vh;
  std::vector<EdgeSpec> eg, eh;
  for (std::size_t i = 0; i <= n; ++i) {
    vg.insert("m" + std::to_string(i));
    vh.insert("m" + std::to_string(i));
  }
  eg.push_back({"g_in", "in", "m0"});
  for (std::size_t i = 0; i < n; ++i) {
    const std::string a = "m" + std::to_string(i), b = "m" + std::to_string(i + 1);
    (i % 2 == 0 ? eh : eg).push_back({"s" + std::to_string(i), a, b});
    (i % 2 == 0 ? eh : eg).push_back({"t" + std::to_string(i), a, b});
  }
  (n % 2 == 0 ? eh : eg).push_back({"x_out", "m" + std::to_string(n), "out"});
  (n % 2 == 0 ? vh : vg).insert("out");
  return {make_graph(vg, eg), make_graph(vh, eh)};
}

void BM_ExecuteLadder(benchmark::State& state) {
  const auto [g, h] = ladder(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(execute(g, h));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExecuteLadder)->RangeMultiplier(2)->Range(2, 12);

// n disjoint 2-cycles between G and H.
void BM_PrimeCycles(benchmark::State& state) {
  std::set<VertexId> vs;
  std::vector<EdgeSpec> eg, eh;
  for (int i = 0; i < state.range(0); ++i) {
    const std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
    vs.insert(a);
    vs.insert(b);
    eg.push_back({"e" + std::to_string(i), a, b});
    eh.push_back({"f" + std::to_string(i), b, a});
  }
  const Graph g = make_graph(vs, eg), h = make_graph(vs, eh);
  for (auto _ : state) benchmark::DoNotOptimize(prime_cycles(g, h, Orientation::Unoriented));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PrimeCycles)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_RandomTripleAssociativity(benchmark::State& state) {
  std::uint64_t i = 0;
  for (auto _ : state) {
    Rng rng = trial_rng(1, i++);
    const auto t = random_triple(rng, 8, 8);
    try {
      benchmark::DoNotOptimize(check_associativity(t.f, t.g, t.h));
    } catch (const Error&) {
    }
  }
}
BENCHMARK(BM_RandomTripleAssociativity);

void BM_Cob0Compose(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const LabelSet a = standard_object(n);
  std::vector<PointPair> pairs;
  for (std::size_t i = 1; i + 1 <= n; i += 2) {
    pairs.push_back({{Boundary::Source, "p" + std::to_string(i)}, {Boundary::Source, "p" + std::to_string(i + 1)}});
    pairs.push_back({{Boundary::Target, "p" + std::to_string(i)}, {Boundary::Target, "p" + std::to_string(i + 1)}});
  }
  const auto m = Cob0Morphism::make(a, a, pairs);
  for (auto _ : state) benchmark::DoNotOptimize(cob0_compose(m, m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Cob0Compose)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_Functoriality(benchmark::State& state) {
  const auto homs = cob0_enumerate(standard_object(3), standard_object(3), 0);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_functoriality(homs[i % homs.size()], homs[(i * 7 + 3) % homs.size()]));
    ++i;
  }
}
BENCHMARK(BM_Functoriality);

void BM_Campaign(benchmark::State& state, const char* name) {
  CampaignOptions o;
  o.trials = 200;
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign(name, o));
}
BENCHMARK_CAPTURE(BM_Campaign, trefoil, "trefoil")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Campaign, cob0_laws, "cob0-laws")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Campaign, bimod_well_defined, "bimod-well-defined")->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
