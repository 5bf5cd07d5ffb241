#include "dls/graph.hpp"

#include "dls/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <string_view>

namespace dls {

namespace {

constexpr VertexSet bit(int v) noexcept
{
	return VertexSet{1} << v;
}

constexpr VertexSet low_mask(int n) noexcept
{
	return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

int lowest(VertexSet s) noexcept
{
	return std::countr_zero(s);
}

std::string pair_text(int u, int v)
{
	return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void check_order(int n)
{
	if (n < 0)
		throw InvalidGraph("vertex count must be nonnegative");
	if (n > kMaxVertices)
		throw VertexCapExceeded(n, kMaxVertices);
}

} // namespace

Graph::Graph(int n)
{
	check_order(n);
	adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges)
{
	Graph g(n);
	for (const auto& [u, v] : edges) {
		if (u < 0 || v < 0 || u >= n || v >= n)
			throw InvalidGraph("edge " + pair_text(u, v) + " has an endpoint outside 0.." + std::to_string(n - 1));
		if (u == v)
			throw InvalidGraph("edge " + pair_text(u, v) + " is a self-loop");
		g.adj_[u] |= bit(v);
		g.adj_[v] |= bit(u);
	}
	return g;
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows)
{
	const int n = static_cast<int>(rows.size());
	check_order(n);
	const VertexSet valid = low_mask(n);
	for (int i = 0; i < n; ++i) {
		if (rows[i] & ~valid)
			throw InvalidGraph("row " + std::to_string(i) + " references a vertex >= " + std::to_string(n));
		if (rows[i] & bit(i))
			throw InvalidGraph("self-loop at vertex " + std::to_string(i));
		for (VertexSet s = rows[i]; s; s &= s - 1) {
			const int j = lowest(s);
			if (!(rows[j] & bit(i)))
				throw InvalidGraph("adjacency is not symmetric at " + pair_text(i, j));
		}
	}
	Graph g;
	g.adj_ = std::move(rows);
	return g;
}

int Graph::size() const noexcept
{
	int twice = 0;
	for (VertexSet row : adj_)
		twice += std::popcount(row);
	return twice / 2;
}

int Graph::degree(int v) const noexcept
{
	return std::popcount(adj_[v]);
}

int Graph::max_degree() const noexcept
{
	int best = 0;
	for (VertexSet row : adj_)
		best = std::max(best, std::popcount(row));
	return best;
}

std::vector<int> Graph::degrees() const
{
	std::vector<int> out;
	out.reserve(adj_.size());
	for (VertexSet row : adj_)
		out.push_back(std::popcount(row));
	return out;
}

std::vector<Edge> Graph::edges() const
{
	std::vector<Edge> out;
	for (int v = 1; v < order(); ++v)
		for (int u = 0; u < v; ++u)
			if (has_edge(u, v))
				out.push_back({u, v});
	return out;
}

VertexSet Graph::all_vertices() const noexcept
{
	return low_mask(order());
}

Graph complement(const Graph& g)
{
	Graph out(g.order());
	const VertexSet all = g.all_vertices();
	for (int v = 0; v < g.order(); ++v)
		out.adj_[v] = all & ~g.adj_[v] & ~bit(v);
	return out;
}

Graph delete_edge(const Graph& g, Edge e)
{
	const int n = g.order();
	if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v || !g.has_edge(e.u, e.v))
		throw EdgeAbsent(e.u, e.v);
	Graph out = g;
	out.adj_[e.u] &= ~bit(e.v);
	out.adj_[e.v] &= ~bit(e.u);
	return out;
}

Components connected_components(const Graph& g)
{
	const int n = g.order();
	Components c;
	c.labels.assign(static_cast<std::size_t>(n), -1);
	VertexSet unseen = g.all_vertices();
	while (unseen) {
		const int root = lowest(unseen);
		VertexSet reached = bit(root);
		VertexSet frontier = reached;
		while (frontier) {
			VertexSet next = 0;
			for (VertexSet s = frontier; s; s &= s - 1)
				next |= g.neighbors(lowest(s));
			frontier = next & ~reached;
			reached |= next;
		}
		for (VertexSet s = reached; s; s &= s - 1)
			c.labels[lowest(s)] = c.count;
		unseen &= ~reached;
		++c.count;
	}
	return c;
}

bool is_connected(const Graph& g)
{
	if (g.order() == 0)
		return false;
	VertexSet reached = 1;
	VertexSet frontier = 1;
	while (frontier) {
		VertexSet next = 0;
		for (VertexSet s = frontier; s; s &= s - 1)
			next |= g.neighbors(lowest(s));
		frontier = next & ~reached;
		reached |= next;
	}
	return reached == g.all_vertices();
}

DistanceSummary apsp_distance_summary(const Graph& g)
{
	const int n = g.order();
	const auto comps = connected_components(g);
	if (comps.count != 1)
		throw DisconnectedGraph(comps.count);

	DistanceSummary s;
	s.n = n;
	s.dist.assign(static_cast<std::size_t>(n) * n, 0);
	s.tr.assign(static_cast<std::size_t>(n), 0);

	for (int src = 0; src < n; ++src) {
		VertexSet reached = bit(src);
		VertexSet frontier = reached;
		int level = 0;
		std::int64_t tr = 0;
		while (frontier) {
			VertexSet next = 0;
			for (VertexSet f = frontier; f; f &= f - 1)
				next |= g.neighbors(lowest(f));
			next &= ~reached;
			++level;
			for (VertexSet f = next; f; f &= f - 1) {
				s.dist[static_cast<std::size_t>(src) * n + lowest(f)] = level;
				tr += level;
			}
			if (next)
				s.diameter = std::max(s.diameter, level);
			reached |= next;
			frontier = next;
		}
		s.tr[src] = tr;
	}

	s.tr_max = *std::max_element(s.tr.begin(), s.tr.end());
	s.tr_min = *std::min_element(s.tr.begin(), s.tr.end());
	std::int64_t tr_total = 0;
	std::int64_t tr_sq = 0;
	for (auto t : s.tr) {
		tr_total += t;
		tr_sq += t * t;
	}
	s.wiener = tr_total / 2;
	std::int64_t pair_sq = 0;
	for (int u = 0; u < n; ++u)
		for (int v = u + 1; v < n; ++v) {
			const std::int64_t d = s.distance(u, v);
			pair_sq += d * d;
		}
	s.r1 = tr_sq + 2 * pair_sq;
	return s;
}

bool diameter_at_most_two(const Graph& g)
{
	const int n = g.order();
	for (int u = 0; u < n; ++u) {
		const VertexSet non_nbrs = g.all_vertices() & ~g.neighbors(u) & ~bit(u);
		for (VertexSet s = non_nbrs & ~low_mask(u + 1); s; s &= s - 1)
			if ((g.neighbors(u) & g.neighbors(lowest(s))) == 0)
				return false;
	}
	return true;
}

namespace {

class CliqueSearch
{
public:
	explicit CliqueSearch(std::span<const VertexSet> adj)
		: adj_(adj)
	{
	}

	int run(VertexSet candidates)
	{
		if (candidates)
			expand(candidates, 0);
		return best_;
	}

private:
	// Greedy sequential colouring of the candidates gives, for each vertex in
	// colouring order, an upper bound on the clique size reachable through it.
	void expand(VertexSet cand, int size)
	{
		std::array<int, kMaxVertices> order{};
		std::array<int, kMaxVertices> bound{};
		int count = 0;
		int color = 0;
		for (VertexSet uncolored = cand; uncolored;) {
			++color;
			for (VertexSet q = uncolored; q;) {
				const int v = lowest(q);
				q &= ~bit(v) & ~adj_[v];
				uncolored &= ~bit(v);
				order[count] = v;
				bound[count] = color;
				++count;
			}
		}
		for (int i = count - 1; i >= 0; --i) {
			if (size + bound[i] <= best_)
				return;
			const int v = order[i];
			const VertexSet next = cand & adj_[v];
			if (next)
				expand(next, size + 1);
			else
				best_ = std::max(best_, size + 1);
			cand &= ~bit(v);
		}
	}

	std::span<const VertexSet> adj_;
	int best_ = 0;
};

int greedy_clique_size(const Graph& g)
{
	VertexSet cand = g.all_vertices();
	int size = 0;
	while (cand) {
		int pick = -1;
		int pick_deg = -1;
		for (VertexSet s = cand; s; s &= s - 1) {
			const int v = lowest(s);
			const int d = std::popcount(g.neighbors(v) & cand);
			if (d > pick_deg) {
				pick = v;
				pick_deg = d;
			}
		}
		++size;
		cand &= g.neighbors(pick);
	}
	return size;
}

class ColoringSearch
{
public:
	ColoringSearch(const Graph& g, int k)
		: g_(g)
		, k_(k)
	{
	}

	bool run()
	{
		if (g_.order() == 0)
			return true;
		if (k_ <= 0)
			return false;
		classes_.assign(static_cast<std::size_t>(k_), 0);
		return assign(g_.all_vertices(), 0);
	}

private:
	int saturation(int v) const
	{
		int sat = 0;
		for (VertexSet c : classes_)
			if (c & g_.neighbors(v))
				++sat;
		return sat;
	}

	// DSATUR branching: colour the uncoloured vertex seeing the most distinct
	// colours; new colours are opened one at a time to break symmetry.
	bool assign(VertexSet uncolored, int used)
	{
		if (!uncolored)
			return true;
		int pick = -1;
		int pick_sat = -1;
		int pick_deg = -1;
		for (VertexSet s = uncolored; s; s &= s - 1) {
			const int v = lowest(s);
			const int sat = saturation(v);
			const int deg = std::popcount(g_.neighbors(v) & uncolored);
			if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
				pick = v;
				pick_sat = sat;
				pick_deg = deg;
			}
		}
		const int limit = std::min(k_, used + 1);
		for (int c = 0; c < limit; ++c) {
			if (classes_[c] & g_.neighbors(pick))
				continue;
			classes_[c] |= bit(pick);
			if (assign(uncolored & ~bit(pick), std::max(used, c + 1)))
				return true;
			classes_[c] &= ~bit(pick);
		}
		return false;
	}

	const Graph& g_;
	int k_;
	std::vector<VertexSet> classes_;
};

} // namespace

int clique_number(const Graph& g)
{
	return CliqueSearch(g.rows()).run(g.all_vertices());
}

int independence_number(const Graph& g)
{
	const Graph co = complement(g);
	return CliqueSearch(co.rows()).run(co.all_vertices());
}

bool is_k_colorable(const Graph& g, int k)
{
	return ColoringSearch(g, k).run();
}

int chromatic_number(const Graph& g)
{
	const int n = g.order();
	if (n > kChromaticCap)
		throw VertexCapExceeded(n, kChromaticCap);
	if (n == 0)
		return 0;
	for (int k = greedy_clique_size(g); k <= n; ++k)
		if (is_k_colorable(g, k))
			return k;
	return n;
}

SymmetricMatrix laplacian_matrix(const Graph& g)
{
	const int n = g.order();
	SymmetricMatrix m(n);
	for (int v = 0; v < n; ++v) {
		m.set(v, v, g.degree(v));
		for (VertexSet s = g.neighbors(v) & ~low_mask(v + 1); s; s &= s - 1)
			m.set(v, lowest(s), -1.0);
	}
	return m;
}

Graph parse_edge_list(const std::string& text, int n_hint)
{
	std::vector<Edge> edges;
	int max_label = -1;
	std::string_view rest = text;

	auto trim = [](std::string_view s) {
		while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
			s.remove_prefix(1);
		while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
			s.remove_suffix(1);
		return s;
	};
	auto parse_int = [&](std::string_view s, std::string_view token) {
		s = trim(s);
		int value = 0;
		const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
		if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
			throw InvalidGraph("malformed edge '" + std::string(token) + "' (expected u-v)");
		return value;
	};

	while (!rest.empty()) {
		const auto comma = rest.find(',');
		const std::string_view token = trim(rest.substr(0, comma));
		rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
		if (token.empty())
			continue;
		const auto dash = token.find('-');
		if (dash == std::string_view::npos)
			throw InvalidGraph("malformed edge '" + std::string(token) + "' (expected u-v)");
		const int u = parse_int(token.substr(0, dash), token);
		const int v = parse_int(token.substr(dash + 1), token);
		max_label = std::max({max_label, u, v});
		edges.push_back({u, v});
	}
	const int n = n_hint > 0 ? n_hint : max_label + 1;
	return Graph::from_edge_list(n, edges);
}

std::string format_edge_list(const Graph& g)
{
	std::string out;
	for (const auto& [u, v] : g.edges()) {
		if (!out.empty())
			out += ',';
		out += std::to_string(u) + "-" + std::to_string(v);
	}
	return out;
}

} // namespace dls
