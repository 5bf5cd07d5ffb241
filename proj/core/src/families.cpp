#include "dls/families.hpp"

#include "dls/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

namespace dls {

std::string_view to_string(FamilyKind kind)
{
	switch (kind) {
	case FamilyKind::Complete: return "Complete";
	case FamilyKind::Star: return "Star";
	case FamilyKind::CompleteBipartite: return "CompleteBipartite";
	case FamilyKind::CompleteMultipartite: return "CompleteMultipartite";
	case FamilyKind::KnMinusE: return "KnMinusE";
	case FamilyKind::Path: return "Path";
	case FamilyKind::Cycle: return "Cycle";
	case FamilyKind::TuranType: return "TuranType";
	}
	return "?";
}

namespace {

void require(bool ok, const std::string& reason)
{
	if (!ok)
		throw InvalidParams(reason);
}

void require_order(int n, int min_n, std::string_view family)
{
	require(n >= min_n, std::string(family) + " needs n >= " + std::to_string(min_n) + ", got " + std::to_string(n));
	require(n <= kMaxVertices, std::string(family) + " exceeds the vertex cap of " + std::to_string(kMaxVertices));
}

std::string join(const std::vector<int>& xs)
{
	std::string out;
	for (std::size_t i = 0; i < xs.size(); ++i) {
		if (i)
			out += ',';
		out += std::to_string(xs[i]);
	}
	return out;
}

} // namespace

FamilySpec FamilySpec::complete(int n)
{
	require_order(n, 1, "Complete");
	return {FamilyKind::Complete, n, std::vector<int>(static_cast<std::size_t>(n), 1), 0};
}

FamilySpec FamilySpec::star(int n)
{
	require_order(n, 2, "Star");
	return {FamilyKind::Star, n, {n - 1, 1}, 0};
}

FamilySpec FamilySpec::complete_bipartite(int a, int b)
{
	require(a >= 1 && b >= 1, "CompleteBipartite needs both sides >= 1");
	require_order(a + b, 2, "CompleteBipartite");
	return {FamilyKind::CompleteBipartite, a + b, {std::max(a, b), std::min(a, b)}, 0};
}

FamilySpec FamilySpec::complete_multipartite(std::vector<int> parts)
{
	require(!parts.empty(), "CompleteMultipartite needs at least one part");
	for (int p : parts)
		require(p >= 1, "CompleteMultipartite parts must be >= 1");
	const int n = std::accumulate(parts.begin(), parts.end(), 0);
	require_order(n, 1, "CompleteMultipartite");
	std::sort(parts.begin(), parts.end(), std::greater<>());
	return {FamilyKind::CompleteMultipartite, n, std::move(parts), 0};
}

FamilySpec FamilySpec::kn_minus_e(int n)
{
	require_order(n, 3, "KnMinusE");
	std::vector<int> parts(static_cast<std::size_t>(n - 1), 1);
	parts[0] = 2;
	return {FamilyKind::KnMinusE, n, std::move(parts), 0};
}

FamilySpec FamilySpec::path(int n)
{
	require_order(n, 1, "Path");
	return {FamilyKind::Path, n, {}, 0};
}

FamilySpec FamilySpec::cycle(int n)
{
	require_order(n, 3, "Cycle");
	return {FamilyKind::Cycle, n, {}, 0};
}

FamilySpec FamilySpec::turan_type(int n, int chi)
{
	require_order(n, 2, "TuranType");
	require(2 * chi >= n && chi <= n - 1,
			"TuranType needs n/2 <= chi <= n-1, got n=" + std::to_string(n) + " chi=" + std::to_string(chi));
	std::vector<int> parts(static_cast<std::size_t>(n - chi), 2);
	parts.insert(parts.end(), static_cast<std::size_t>(2 * chi - n), 1);
	return {FamilyKind::TuranType, n, std::move(parts), chi};
}

std::optional<std::vector<int>> FamilySpec::multipartite_parts() const
{
	if (kind == FamilyKind::Path || kind == FamilyKind::Cycle)
		return std::nullopt;
	return parts;
}

std::string FamilySpec::describe() const
{
	switch (kind) {
	case FamilyKind::Complete: return "K_" + std::to_string(n);
	case FamilyKind::Star: return "S_" + std::to_string(n);
	case FamilyKind::Path: return "P_" + std::to_string(n);
	case FamilyKind::Cycle: return "C_" + std::to_string(n);
	case FamilyKind::KnMinusE: return "K_" + std::to_string(n) + "-e";
	case FamilyKind::CompleteBipartite:
	case FamilyKind::CompleteMultipartite:
	case FamilyKind::TuranType: return "K_{" + join(parts) + "}";
	}
	return "?";
}

FamilySpec parse_family(std::string_view name, std::string_view params_csv)
{
	std::string key;
	for (char c : name)
		if (c != '_' && c != '-')
			key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

	std::vector<int> params;
	while (!params_csv.empty()) {
		const auto comma = params_csv.find(',');
		std::string_view tok = params_csv.substr(0, comma);
		params_csv = comma == std::string_view::npos ? std::string_view{} : params_csv.substr(comma + 1);
		while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
			tok.remove_prefix(1);
		while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
			tok.remove_suffix(1);
		int value = 0;
		const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
		require(!tok.empty() && ec == std::errc{} && ptr == tok.data() + tok.size(),
				"family parameter '" + std::string(tok) + "' is not an integer");
		params.push_back(value);
	}

	auto expect = [&](std::size_t count, std::string_view family) {
		require(params.size() == count, std::string(family) + " takes " + std::to_string(count) + " parameter(s), got "
											+ std::to_string(params.size()));
	};

	if (key == "complete" || key == "k") {
		expect(1, "Complete");
		return FamilySpec::complete(params[0]);
	}
	if (key == "star") {
		expect(1, "Star");
		return FamilySpec::star(params[0]);
	}
	if (key == "completebipartite" || key == "bipartite") {
		expect(2, "CompleteBipartite");
		return FamilySpec::complete_bipartite(params[0], params[1]);
	}
	if (key == "completemultipartite" || key == "multipartite") {
		return FamilySpec::complete_multipartite(params);
	}
	if (key == "knminuse") {
		expect(1, "KnMinusE");
		return FamilySpec::kn_minus_e(params[0]);
	}
	if (key == "path") {
		expect(1, "Path");
		return FamilySpec::path(params[0]);
	}
	if (key == "cycle") {
		expect(1, "Cycle");
		return FamilySpec::cycle(params[0]);
	}
	if (key == "turantype" || key == "turan") {
		expect(2, "TuranType");
		return FamilySpec::turan_type(params[0], params[1]);
	}
	throw InvalidParams("unknown family '" + std::string(name) + "'");
}

Graph generate(const FamilySpec& spec)
{
	const int n = spec.n;
	std::vector<Edge> edges;
	if (auto parts = spec.multipartite_parts()) {
		std::vector<int> part_of;
		for (int i = 0; i < static_cast<int>(parts->size()); ++i)
			part_of.insert(part_of.end(), static_cast<std::size_t>((*parts)[i]), i);
		if (spec.kind == FamilyKind::Star) {
			// centre first
			std::reverse(part_of.begin(), part_of.end());
		}
		for (int u = 0; u < n; ++u)
			for (int v = u + 1; v < n; ++v)
				if (part_of[u] != part_of[v])
					edges.push_back({u, v});
	} else {
		for (int v = 0; v + 1 < n; ++v)
			edges.push_back({v, v + 1});
		if (spec.kind == FamilyKind::Cycle)
			edges.push_back({n - 1, 0});
	}
	return Graph::from_edge_list(n, edges);
}

Spectrum multipartite_closed_form_spectrum(std::span<const int> parts)
{
	require(parts.size() >= 2, "closed-form spectrum needs at least two parts");
	for (int p : parts)
		require(p >= 1, "parts must be >= 1");
	const int n = std::accumulate(parts.begin(), parts.end(), 0);
	const int k = static_cast<int>(parts.size());

	Spectrum s;
	for (int t : parts)
		s.values.insert(s.values.end(), static_cast<std::size_t>(t - 1), static_cast<double>(n + t));
	s.values.insert(s.values.end(), static_cast<std::size_t>(k - 1), static_cast<double>(n));
	s.values.push_back(0.0);
	std::sort(s.values.begin(), s.values.end(), std::greater<>());
	return s;
}

StructureTag classify_structure(const Graph& g)
{
	StructureTag tag;
	const int n = g.order();
	if (n == 0)
		return tag;

	tag.is_complete = g.size() == n * (n - 1) / 2;

	const Graph co = complement(g);
	const auto comps = connected_components(co);
	std::vector<int> sizes(static_cast<std::size_t>(comps.count), 0);
	std::vector<int> co_edges(static_cast<std::size_t>(comps.count), 0);
	for (int v = 0; v < n; ++v) {
		++sizes[comps.labels[v]];
		co_edges[comps.labels[v]] += co.degree(v);
	}
	bool cliques = true;
	for (int c = 0; c < comps.count; ++c)
		cliques = cliques && co_edges[c] == sizes[c] * (sizes[c] - 1);
	if (!cliques)
		return tag;

	tag.is_complete_multipartite = true;
	std::sort(sizes.begin(), sizes.end(), std::greater<>());
	tag.parts = sizes;
	const auto& p = tag.parts;
	const int k = static_cast<int>(p.size());

	tag.is_balanced_multipartite = p.front() == p.back();
	tag.is_star = k == 2 && p[0] == n - 1 && p[1] == 1;
	tag.is_K_pp = k == 2 && p[0] == p[1];
	tag.is_turan_type = p.front() == 2;
	if (tag.is_turan_type)
		tag.turan_chi = k;
	tag.is_Kn_minus_e = n >= 3 && p.front() == 2 && (k < 2 || p[1] == 1);
	return tag;
}

std::string StructureTag::describe() const
{
	std::string out;
	auto add = [&](const std::string& s) {
		if (!out.empty())
			out += ' ';
		out += s;
	};
	if (is_complete)
		add("complete");
	if (is_star)
		add("star");
	if (is_complete_multipartite)
		add("complete-multipartite{" + join(parts) + "}");
	if (is_balanced_multipartite)
		add("balanced");
	if (is_turan_type)
		add("turan-type(chi=" + std::to_string(turan_chi) + ")");
	if (is_K_pp)
		add("K_pp");
	if (is_Kn_minus_e)
		add("Kn-e");
	return out.empty() ? "none" : out;
}

std::vector<std::vector<int>> multipartite_partitions(int n)
{
	std::vector<std::vector<int>> out;
	std::vector<int> cur;
	std::function<void(int, int)> rec = [&](int remaining, int max_part) {
		if (remaining == 0) {
			if (cur.size() >= 2)
				out.push_back(cur);
			return;
		}
		for (int p = std::min(remaining, max_part); p >= 1; --p) {
			cur.push_back(p);
			rec(remaining - p, p);
			cur.pop_back();
		}
	};
	rec(n, n);
	return out;
}

} // namespace dls
