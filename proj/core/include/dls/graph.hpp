#pragma once

#include "dls/symmetric_eigen.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dls {

/// One bit per vertex; bit v set means vertex v is in the set.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// Exactness cap for chromatic_number.
inline constexpr int kChromaticCap = 32;

struct Edge
{
	int u;
	int v;

	friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with one adjacency word per vertex.
///
/// Values are immutable after construction; every factory validates symmetry and
/// the absence of self-loops.
class Graph
{
public:
	Graph() = default;

	/// Edgeless graph on n vertices, 0 <= n <= 64.
	explicit Graph(int n);

	/// Throws InvalidGraph naming the offending pair for an out-of-range endpoint
	/// or a self-loop. Duplicate pairs collapse.
	static Graph from_edge_list(int n, std::span<const Edge> edges);

	/// Adopts adjacency rows directly. Throws InvalidGraph when the rows are not
	/// symmetric, contain a self-loop, or reference vertices >= n.
	static Graph from_adjacency(std::vector<VertexSet> rows);

	int order() const noexcept { return static_cast<int>(adj_.size()); }
	int size() const noexcept;

	bool has_edge(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
	VertexSet neighbors(int v) const noexcept { return adj_[v]; }
	std::span<const VertexSet> rows() const noexcept { return adj_; }

	int degree(int v) const noexcept;
	int max_degree() const noexcept;
	std::vector<int> degrees() const;

	/// Edges (u,v) with u < v, ordered by v then u (graph6 order).
	std::vector<Edge> edges() const;

	/// Mask with the low n bits set.
	VertexSet all_vertices() const noexcept;

	friend bool operator==(const Graph&, const Graph&) = default;

private:
	std::vector<VertexSet> adj_;

	friend Graph complement(const Graph& g);
	friend Graph delete_edge(const Graph& g, Edge e);
};

Graph complement(const Graph& g);

/// Removes one edge. Throws EdgeAbsent when e is not an edge of g.
Graph delete_edge(const Graph& g, Edge e);

struct Components
{
	int count = 0;
	std::vector<int> labels;
};

/// Component ids are assigned 0,1,... in order of each component's smallest vertex.
Components connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// All-pairs hop distances of a connected graph and the scalars derived from them.
/// Every quantity is an exact integer.
struct DistanceSummary
{
	int n = 0;
	std::vector<int> dist; // row-major n*n
	std::vector<std::int64_t> tr;
	std::int64_t tr_max = 0;
	std::int64_t tr_min = 0;
	std::int64_t wiener = 0;
	int diameter = 0;
	/// Sum of squared transmissions plus twice the sum of squared distances over unordered pairs.
	std::int64_t r1 = 0;

	int distance(int u, int v) const noexcept { return dist[static_cast<std::size_t>(u) * n + v]; }
	bool transmission_regular() const noexcept { return tr_max == tr_min; }
};

/// BFS from every vertex. Throws DisconnectedGraph when g is not connected.
DistanceSummary apsp_distance_summary(const Graph& g);

/// True when every non-adjacent pair of distinct vertices has a common neighbour.
/// Equivalent to diameter <= 2 on connected graphs; needs no distance matrix.
bool diameter_at_most_two(const Graph& g);

/// Size of a maximum clique, by branch-and-bound with greedy-colouring pruning.
int clique_number(const Graph& g);

/// alpha(G), computed as the clique number of the complement. Zero only for n = 0.
int independence_number(const Graph& g);

/// chi(G) by iterative deepening over k starting from a greedily found clique.
/// Throws VertexCapExceeded for n > 32.
int chromatic_number(const Graph& g);

/// Backtracking test for a proper colouring with k colours.
bool is_k_colorable(const Graph& g, int k);

/// Degree diagonal minus adjacency.
SymmetricMatrix laplacian_matrix(const Graph& g);

/// Parses "u-v,u-v,..." (whitespace tolerated). The vertex count is max label + 1
/// unless n_hint is positive. Throws InvalidGraph on malformed text.
Graph parse_edge_list(const std::string& text, int n_hint = 0);

std::string format_edge_list(const Graph& g);

} // namespace dls
