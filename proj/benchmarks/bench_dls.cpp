#include <benchmark/benchmark.h>

#include "dls/dlap.hpp"
#include "dls/families.hpp"
#include "dls/graph6.hpp"
#include "dls/verify.hpp"

#include <random>

using namespace dls;

static Graph random_connected(int n, double p, std::uint64_t seed)
{
	std::mt19937_64 rng(seed);
	std::bernoulli_distribution coin(p);
	for (;;) {
		std::vector<Edge> edges;
		for (int u = 0; u < n; ++u)
			for (int v = u + 1; v < n; ++v)
				if (coin(rng))
					edges.push_back({u, v});
		Graph g = Graph::from_edge_list(n, edges);
		if (is_connected(g))
			return g;
	}
}

static void BM_Apsp(benchmark::State& state)
{
	const Graph g = random_connected(static_cast<int>(state.range(0)), 0.2, 1);
	for (auto _ : state)
		benchmark::DoNotOptimize(apsp_distance_summary(g));
	state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Apsp)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_DistanceLaplacianSpectrum(benchmark::State& state)
{
	const auto m = distance_laplacian(random_connected(static_cast<int>(state.range(0)), 0.2, 2));
	for (auto _ : state)
		benchmark::DoNotOptimize(symmetric_eigenvalues(m));
	state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DistanceLaplacianSpectrum)->RangeMultiplier(2)->Range(8, 64)->Complexity(benchmark::oNCubed);

static void BM_PathSpectrum(benchmark::State& state)
{
	const auto m = distance_laplacian(generate(FamilySpec::path(static_cast<int>(state.range(0)))));
	for (auto _ : state)
		benchmark::DoNotOptimize(symmetric_eigenvalues(m));
}
BENCHMARK(BM_PathSpectrum)->Arg(16)->Arg(64);

static void BM_ChromaticNumber(benchmark::State& state)
{
	const Graph g = random_connected(static_cast<int>(state.range(0)), 0.5, 3);
	for (auto _ : state)
		benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_ChromaticNumber)->Arg(12)->Arg(20)->Arg(28);

static void BM_IndependenceNumber(benchmark::State& state)
{
	const Graph g = random_connected(static_cast<int>(state.range(0)), 0.3, 4);
	for (auto _ : state)
		benchmark::DoNotOptimize(independence_number(g));
}
BENCHMARK(BM_IndependenceNumber)->Arg(16)->Arg(32)->Arg(64);

static void BM_VerifyGraph(benchmark::State& state)
{
	const Graph g = random_connected(static_cast<int>(state.range(0)), 0.4, 5);
	const VerifyOptions opt;
	for (auto _ : state)
		benchmark::DoNotOptimize(verify_graph(g, opt));
}
BENCHMARK(BM_VerifyGraph)->Arg(6)->Arg(10)->Arg(16);

static void BM_EnumerateConnected(benchmark::State& state)
{
	for (auto _ : state) {
		LabeledConnectedEnumerator en(static_cast<int>(state.range(0)));
		std::uint64_t count = 0;
		while (en.next())
			++count;
		benchmark::DoNotOptimize(count);
	}
}
BENCHMARK(BM_EnumerateConnected)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Graph6RoundTrip(benchmark::State& state)
{
	const Graph g = random_connected(static_cast<int>(state.range(0)), 0.5, 6);
	for (auto _ : state)
		benchmark::DoNotOptimize(parse_graph6(write_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(7)->Arg(62);

BENCHMARK_MAIN();
