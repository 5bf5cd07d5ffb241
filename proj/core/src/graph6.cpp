#include "dls/graph6.hpp"

#include "dls/errors.hpp"

#include <bit>

namespace dls {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxByte = 126;
constexpr std::string_view kHeader = ">>graph6<<";

std::string strip(std::string_view line)
{
	if (line.substr(0, kHeader.size()) == kHeader)
		line.remove_prefix(kHeader.size());
	while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
		line.remove_suffix(1);
	return std::string(line);
}

} // namespace

Graph parse_graph6(std::string_view raw)
{
	const std::string line = strip(raw);
	for (std::size_t i = 0; i < line.size(); ++i) {
		const int c = static_cast<unsigned char>(line[i]);
		if (c < kOffset || c > kMaxByte)
			throw Graph6Error(Graph6Error::Kind::BadChar, i,
							  "graph6: byte " + std::to_string(c) + " at position " + std::to_string(i)
								  + " is outside 63..126");
	}
	if (line.empty())
		throw Graph6Error(Graph6Error::Kind::Truncated, 0, "graph6: empty line");

	auto byte = [&](std::size_t i) { return static_cast<std::uint64_t>(static_cast<unsigned char>(line[i]) - kOffset); };

	std::uint64_t n = 0;
	std::size_t pos = 0;
	if (byte(0) != kMaxByte - kOffset) {
		n = byte(0);
		pos = 1;
	} else {
		const bool wide = line.size() > 1 && byte(1) == kMaxByte - kOffset;
		const std::size_t start = wide ? 2 : 1;
		const std::size_t width = wide ? 6 : 3;
		if (line.size() < start + width)
			throw Graph6Error(Graph6Error::Kind::Truncated, line.size(),
							  "graph6: size field truncated (expected " + std::to_string(start + width) + " bytes, got "
								  + std::to_string(line.size()) + ")");
		for (std::size_t i = 0; i < width; ++i)
			n = (n << 6) | byte(start + i);
		pos = start + width;
	}
	if (n > static_cast<std::uint64_t>(kMaxVertices))
		throw VertexCapExceeded(static_cast<int>(std::min<std::uint64_t>(n, 1U << 30)), kMaxVertices);

	const int order = static_cast<int>(n);
	const std::size_t bits = static_cast<std::size_t>(order) * (order - (order > 0 ? 1 : 0)) / 2;
	const std::size_t expected = (bits + 5) / 6;
	const std::size_t got = line.size() - pos;
	if (got < expected)
		throw Graph6Error(Graph6Error::Kind::Truncated, line.size(),
						  "graph6: expected " + std::to_string(expected) + " data bytes, got " + std::to_string(got));
	if (got > expected)
		throw Graph6Error(Graph6Error::Kind::TrailingBytes, pos + expected,
						  "graph6: expected " + std::to_string(expected) + " data bytes, got " + std::to_string(got));

	std::vector<VertexSet> rows(static_cast<std::size_t>(order), 0);
	std::size_t k = 0;
	for (int v = 1; v < order; ++v)
		for (int u = 0; u < v; ++u, ++k) {
			const std::uint64_t b = byte(pos + k / 6);
			if ((b >> (5 - k % 6)) & 1U) {
				rows[u] |= VertexSet{1} << v;
				rows[v] |= VertexSet{1} << u;
			}
		}
	if (bits % 6 != 0) {
		const std::uint64_t last = byte(pos + expected - 1);
		const std::uint64_t pad_mask = (std::uint64_t{1} << (6 - bits % 6)) - 1;
		if (last & pad_mask)
			throw Graph6Error(Graph6Error::Kind::NonzeroPadding, pos + expected - 1, "graph6: nonzero padding bits");
	}
	return Graph::from_adjacency(std::move(rows));
}

std::string write_graph6(const Graph& g)
{
	const int n = g.order();
	if (n > 62)
		throw Graph6Error(Graph6Error::Kind::TooLarge, 0,
						  "graph6: writing supports n <= 62, got " + std::to_string(n));
	std::string out;
	out += static_cast<char>(n + kOffset);
	int acc = 0;
	int filled = 0;
	for (int v = 1; v < n; ++v)
		for (int u = 0; u < v; ++u) {
			acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
			if (++filled == 6) {
				out += static_cast<char>(acc + kOffset);
				acc = 0;
				filled = 0;
			}
		}
	if (filled > 0)
		out += static_cast<char>((acc << (6 - filled)) + kOffset);
	return out;
}

std::optional<Graph6Reader::Record> Graph6Reader::next()
{
	std::string line;
	while (std::getline(in_, line)) {
		++line_number_;
		if (!line.empty() && line.back() == '\r')
			line.pop_back();
		if (line.empty() || line == kHeader)
			continue;
		Record rec;
		rec.line_number = line_number_;
		rec.text = line;
		try {
			rec.result = parse_graph6(line);
			rec.text = strip(line);
		} catch (const Error& err) {
			rec.result = std::string(err.what());
		}
		return rec;
	}
	return std::nullopt;
}

std::uint64_t LabeledConnectedEnumerator::mask_count(int n)
{
	return std::uint64_t{1} << (n * (n - 1) / 2);
}

LabeledConnectedEnumerator::LabeledConnectedEnumerator(int n)
	: LabeledConnectedEnumerator(n, 0, n >= 2 && n <= kEnumerationCap ? mask_count(n) : 0)
{
}

LabeledConnectedEnumerator::LabeledConnectedEnumerator(int n, std::uint64_t mask_begin, std::uint64_t mask_end)
	: n_(n)
	, next_mask_(mask_begin)
	, end_(mask_end)
{
	if (n > kEnumerationCap)
		throw VertexCapExceeded(n, kEnumerationCap);
	if (n < 2)
		throw InvalidParams("enumeration needs n >= 2");
	if (end_ > mask_count(n))
		end_ = mask_count(n);
}

Graph graph_from_mask(int n, std::uint64_t mask)
{
	std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
	int k = 0;
	for (int v = 1; v < n; ++v)
		for (int u = 0; u < v; ++u, ++k)
			if ((mask >> k) & 1U) {
				rows[u] |= VertexSet{1} << v;
				rows[v] |= VertexSet{1} << u;
			}
	return Graph::from_adjacency(std::move(rows));
}

std::optional<Graph> LabeledConnectedEnumerator::next()
{
	while (next_mask_ < end_) {
		const std::uint64_t mask = next_mask_++;
		// a connected graph needs at least n-1 edges
		if (std::popcount(mask) < n_ - 1)
			continue;
		Graph g = graph_from_mask(n_, mask);
		if (is_connected(g)) {
			current_ = mask;
			return g;
		}
	}
	return std::nullopt;
}

std::uint64_t count_labeled_connected(int n)
{
	LabeledConnectedEnumerator e(n);
	std::uint64_t count = 0;
	while (e.next())
		++count;
	return count;
}

} // namespace dls
