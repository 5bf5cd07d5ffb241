#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dls {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

/// Malformed graph construction input (endpoint out of range, self-loop, bad edge-list text).
class InvalidGraph : public Error
{
public:
	using Error::Error;
};

class VertexCapExceeded : public Error
{
public:
	VertexCapExceeded(int n, int cap)
		: Error("vertex count " + std::to_string(n) + " exceeds cap " + std::to_string(cap))
		, n_(n)
		, cap_(cap)
	{
	}
	int requested() const noexcept { return n_; }
	int cap() const noexcept { return cap_; }

private:
	int n_;
	int cap_;
};

/// Distance quantities were requested on a graph with more than one component.
class DisconnectedGraph : public Error
{
public:
	explicit DisconnectedGraph(int components)
		: Error("graph is disconnected (" + std::to_string(components) + " components)")
		, components_(components)
	{
	}
	int components() const noexcept { return components_; }

private:
	int components_;
};

class EdgeAbsent : public Error
{
public:
	EdgeAbsent(int u, int v)
		: Error("edge " + std::to_string(u) + "-" + std::to_string(v) + " is not present")
	{
	}
};

class IterationLimit : public Error
{
public:
	using Error::Error;
};

class InvalidParams : public Error
{
public:
	using Error::Error;
};

class UnknownTheorem : public Error
{
public:
	explicit UnknownTheorem(const std::string& id)
		: Error("unknown theorem or lemma id '" + id + "'")
	{
	}
};

class MissingEdgeArg : public Error
{
public:
	MissingEdgeArg()
		: Error("lemma L2_5 requires an edge argument")
	{
	}
};

/// An identity that must hold exactly (trace, R1, positivity) was violated beyond tolerance.
/// This signals an eigensolver or APSP defect rather than a mathematical finding.
class InternalIdentityFailure : public Error
{
public:
	using Error::Error;
};

class Graph6Error : public Error
{
public:
	enum class Kind
	{
		BadChar,
		Truncated,
		TrailingBytes,
		NonzeroPadding,
		TooLarge,
	};

	Graph6Error(Kind kind, std::size_t position, const std::string& what)
		: Error(what)
		, kind_(kind)
		, position_(position)
	{
	}
	Kind kind() const noexcept { return kind_; }
	std::size_t position() const noexcept { return position_; }

private:
	Kind kind_;
	std::size_t position_;
};

} // namespace dls
