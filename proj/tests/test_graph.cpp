#include "doctest.h"

#include "dls/errors.hpp"
#include "dls/graph.hpp"
#include "dls/graph6.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <vector>

using namespace dls;

namespace {

Graph path4()
{
	return Graph::from_edge_list(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
}

Graph cycle4()
{
	return Graph::from_edge_list(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

Graph complete(int n)
{
	std::vector<Edge> e;
	for (int u = 0; u < n; ++u)
		for (int v = u + 1; v < n; ++v)
			e.push_back({u, v});
	return Graph::from_edge_list(n, e);
}

Graph star4()
{
	return Graph::from_edge_list(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
}

} // namespace

TEST_CASE("from_edge_list builds symmetric adjacency")
{
	const Graph p4 = path4();
	CHECK(p4.order() == 4);
	CHECK(p4.size() == 3);
	CHECK(p4.has_edge(1, 0));
	CHECK(p4.has_edge(2, 3));
	CHECK_FALSE(p4.has_edge(0, 2));
	CHECK(p4.degrees() == std::vector<int>{1, 2, 2, 1});

	const Graph k1 = Graph::from_edge_list(1, std::vector<Edge>{});
	CHECK(k1.order() == 1);
	CHECK(k1.size() == 0);

	const Graph k4 = complete(4);
	CHECK(k4.size() == 6);
	CHECK(k4.degrees() == std::vector<int>{3, 3, 3, 3});

	const Graph dup = Graph::from_edge_list(3, std::vector<Edge>{{0, 1}, {1, 0}, {0, 1}});
	CHECK(dup.size() == 1);
}

TEST_CASE("from_edge_list rejects bad pairs")
{
	CHECK_THROWS_AS(Graph::from_edge_list(3, std::vector<Edge>{{0, 3}}), InvalidGraph);
	CHECK_THROWS_AS(Graph::from_edge_list(3, std::vector<Edge>{{-1, 2}}), InvalidGraph);
	CHECK_THROWS_WITH_AS(Graph::from_edge_list(3, std::vector<Edge>{{1, 1}}), doctest::Contains("(1,1)"), InvalidGraph);
	CHECK_THROWS_AS(Graph(65), VertexCapExceeded);
}

TEST_CASE("from_adjacency validates rows")
{
	CHECK_NOTHROW(Graph::from_adjacency({0b10, 0b01}));
	CHECK_THROWS_AS(Graph::from_adjacency({0b10, 0b00}), InvalidGraph);
	CHECK_THROWS_AS(Graph::from_adjacency({0b01, 0b00}), InvalidGraph);
	CHECK_THROWS_AS(Graph::from_adjacency({0b100, 0b000}), InvalidGraph);
}

TEST_CASE("complement")
{
	CHECK(complement(complete(4)).size() == 0);

	const Graph co_p4 = complement(path4());
	CHECK(co_p4.edges() == std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}});

	const Graph co_s4 = complement(star4());
	CHECK(co_s4.degree(0) == 0);
	CHECK(co_s4.has_edge(1, 2));
	CHECK(co_s4.has_edge(1, 3));
	CHECK(co_s4.has_edge(2, 3));

	for (const Graph& g : {path4(), cycle4(), star4(), complete(5)})
		CHECK(complement(complement(g)) == g);
}

TEST_CASE("connected_components")
{
	CHECK(connected_components(path4()).count == 1);
	const auto c = connected_components(complement(star4()));
	CHECK(c.count == 2);
	CHECK(c.labels[1] == c.labels[2]);
	CHECK(c.labels[0] != c.labels[1]);
	CHECK(connected_components(Graph(4)).count == 4);
	CHECK(is_connected(path4()));
	CHECK_FALSE(is_connected(Graph(4)));
}

TEST_CASE("apsp_distance_summary")
{
	SUBCASE("K4")
	{
		const auto s = apsp_distance_summary(complete(4));
		for (int u = 0; u < 4; ++u)
			for (int v = 0; v < 4; ++v)
				CHECK(s.distance(u, v) == (u == v ? 0 : 1));
		CHECK(s.tr == std::vector<std::int64_t>{3, 3, 3, 3});
		CHECK(s.wiener == 6);
		CHECK(s.diameter == 1);
		CHECK(s.r1 == 48);
	}
	SUBCASE("P4")
	{
		const auto s = apsp_distance_summary(path4());
		CHECK(s.tr == std::vector<std::int64_t>{6, 4, 4, 6});
		CHECK(s.wiener == 10);
		CHECK(s.diameter == 3);
		CHECK(s.tr_max == 6);
		CHECK(s.tr_min == 4);
	}
	SUBCASE("C4 is transmission regular")
	{
		const auto s = apsp_distance_summary(cycle4());
		CHECK(s.tr == std::vector<std::int64_t>{4, 4, 4, 4});
		CHECK(s.wiener == 8);
		CHECK(s.diameter == 2);
		CHECK(s.transmission_regular());
	}
	SUBCASE("disconnected input")
	{
		CHECK_THROWS_AS(apsp_distance_summary(Graph(3)), DisconnectedGraph);
	}
}

TEST_CASE("distance summary invariants over all connected graphs on 5 vertices")
{
	LabeledConnectedEnumerator en(5);
	int seen = 0;
	while (auto g = en.next()) {
		const auto s = apsp_distance_summary(*g);
		const auto fw = oracle::floyd_distances(*g);
		std::int64_t tr_total = 0;
		for (int u = 0; u < 5; ++u) {
			tr_total += s.tr[u];
			for (int v = 0; v < 5; ++v) {
				REQUIRE(s.distance(u, v) == fw[u][v]);
				REQUIRE((s.distance(u, v) == 1) == g->has_edge(u, v));
				for (int w = 0; w < 5; ++w)
					REQUIRE(s.distance(u, w) <= s.distance(u, v) + s.distance(v, w));
			}
		}
		REQUIRE(tr_total == 2 * s.wiener);
		REQUIRE(s.tr_min * 5 <= 2 * s.wiener);
		REQUIRE(s.tr_max * 5 >= 2 * s.wiener);
		REQUIRE((s.diameter <= 2) == diameter_at_most_two(*g));
		++seen;
	}
	CHECK(seen == 728);
}

TEST_CASE("independence_number")
{
	CHECK(independence_number(complete(6)) == 1);
	const Graph k32 = Graph::from_edge_list(
		5, std::vector<Edge>{{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
	CHECK(independence_number(k32) == 3);
	CHECK(independence_number(path4()) == oracle::brute_independence(path4()));
	CHECK(independence_number(path4()) == 2);
	CHECK(independence_number(Graph(5)) == 5);
}

TEST_CASE("chromatic_number")
{
	CHECK(chromatic_number(complete(5)) == 5);
	CHECK(chromatic_number(cycle4()) == 2);
	const Graph octahedron = complement(Graph::from_edge_list(6, std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}}));
	CHECK(oracle::brute_chromatic(octahedron) == 3);
	CHECK(chromatic_number(octahedron) == 3);
	const Graph c5 = Graph::from_edge_list(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
	CHECK(chromatic_number(c5) == 3);
	CHECK(chromatic_number(Graph(3)) == 1);
	CHECK_THROWS_AS(chromatic_number(Graph(33)), VertexCapExceeded);
	CHECK(is_k_colorable(c5, 3));
	CHECK_FALSE(is_k_colorable(c5, 2));
}

TEST_CASE("alpha and chi agree with brute force on every graph with n <= 5")
{
	for (int n = 1; n <= 5; ++n) {
		const int pairs = n * (n - 1) / 2;
		for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
			const Graph g = graph_from_mask(n, mask);
			REQUIRE(independence_number(g) == oracle::brute_independence(g));
			REQUIRE(chromatic_number(g) == oracle::brute_chromatic(g));
			REQUIRE(clique_number(g) == oracle::brute_independence(complement(g)));
		}
	}
}

TEST_CASE("laplacian_matrix")
{
	const auto l2 = laplacian_matrix(complete(2));
	CHECK(l2(0, 0) == 1.0);
	CHECK(l2(0, 1) == -1.0);
	CHECK(l2(1, 1) == 1.0);

	const auto l3 = laplacian_matrix(complete(3));
	const auto s3 = symmetric_eigenvalues(l3).values;
	CHECK(s3[0] == doctest::Approx(3.0).epsilon(1e-12));
	CHECK(s3[1] == doctest::Approx(3.0).epsilon(1e-12));
	CHECK(std::abs(s3[2]) < 1e-12);

	const auto ls = laplacian_matrix(star4());
	for (int i = 0; i < 4; ++i) {
		double row = 0.0;
		for (int j = 0; j < 4; ++j)
			row += ls(i, j);
		CHECK(row == 0.0);
	}
	oracle::Matrix dense(4, std::vector<double>(4));
	for (int i = 0; i < 4; ++i)
		for (int j = 0; j < 4; ++j)
			dense[i][j] = ls(i, j);
	const auto expect = oracle::jacobi_eigenvalues(dense);
	const auto got = symmetric_eigenvalues(ls).values;
	const std::vector<double> closed{4, 1, 1, 0};
	for (int i = 0; i < 4; ++i) {
		CHECK(got[i] == doctest::Approx(expect[i]).epsilon(1e-10));
		CHECK(std::abs(got[i] - closed[i]) < 1e-10);
	}
}

TEST_CASE("delete_edge")
{
	const Graph k4e = delete_edge(complete(4), {0, 1});
	CHECK(k4e.degrees() == std::vector<int>{2, 2, 3, 3});
	CHECK(delete_edge(cycle4(), {3, 0}) == path4());
	const Graph split = delete_edge(path4(), {0, 1});
	CHECK_FALSE(is_connected(split));
	CHECK_THROWS_AS(delete_edge(path4(), {0, 2}), EdgeAbsent);
}

TEST_CASE("edge list text")
{
	const Graph c4 = parse_edge_list("0-1,1-2,2-3,3-0");
	CHECK(c4 == cycle4());
	CHECK(parse_edge_list(" 0 - 1 , 1-2 ", 5).order() == 5);
	CHECK(format_edge_list(path4()) == "0-1,1-2,2-3");
	CHECK_THROWS_AS(parse_edge_list("0-1,1"), InvalidGraph);
	CHECK_THROWS_AS(parse_edge_list("0-x"), InvalidGraph);
	CHECK_THROWS_AS(parse_edge_list("2-2"), InvalidGraph);
}
