#pragma once

#include "dls/graph.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace dls {

/// Decodes one graph6 line.
///
/// Size field: one byte n+63 for n <= 62, or 126 followed by three bytes (18 bits)
/// or 126 126 followed by six bytes (36 bits). Then ceil(n(n-1)/12) data bytes
/// holding the upper triangle column by column ((0,1),(0,2),(1,2),(0,3),...),
/// six bits per byte, most significant first, each byte offset by 63. Padding
/// bits must be zero. An optional ">>graph6<<" prefix and a trailing newline or
/// carriage return are accepted.
///
/// Throws Graph6Error (BadChar, Truncated, TrailingBytes, NonzeroPadding) or
/// VertexCapExceeded for n > 64.
Graph parse_graph6(std::string_view line);

/// Inverse of parse_graph6 with zero padding. Throws Graph6Error(TooLarge) for n > 62.
std::string write_graph6(const Graph& g);

/// Streams graph6 records from a text source one line at a time. The header
/// ">>graph6<<" and blank lines are skipped. Never holds more than one line.
class Graph6Reader
{
public:
	struct Record
	{
		std::size_t line_number = 0; // 1-based
		std::string text;            // the line without its terminator
		/// The decoded graph, or the parse error message.
		std::variant<Graph, std::string> result;

		bool ok() const noexcept { return std::holds_alternative<Graph>(result); }
	};

	explicit Graph6Reader(std::istream& in)
		: in_(in)
	{
	}

	std::optional<Record> next();

private:
	std::istream& in_;
	std::size_t line_number_ = 0;
};

inline constexpr int kEnumerationCap = 7;

/// Labeled connected graphs on n vertices, one per edge subset, in increasing
/// bitmask order. Bit i of the mask is the i-th vertex pair in graph6 order.
/// A mask range can be set so independent workers can split the space.
class LabeledConnectedEnumerator
{
public:
	/// 2 <= n <= 7; throws VertexCapExceeded above 7 and InvalidParams below 2.
	explicit LabeledConnectedEnumerator(int n);
	LabeledConnectedEnumerator(int n, std::uint64_t mask_begin, std::uint64_t mask_end);

	static std::uint64_t mask_count(int n);

	/// Next connected graph, or nullopt when the range is exhausted.
	std::optional<Graph> next();

	/// Mask of the graph most recently returned by next().
	std::uint64_t mask() const noexcept { return current_; }

private:
	int n_;
	std::uint64_t next_mask_;
	std::uint64_t end_;
	std::uint64_t current_ = 0;
};

/// Graph from an edge-subset mask in graph6 pair order.
Graph graph_from_mask(int n, std::uint64_t mask);

/// Eagerly counts connected graphs via the enumerator.
std::uint64_t count_labeled_connected(int n);

} // namespace dls
