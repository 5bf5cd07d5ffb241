#pragma once

#include "dls/graph.hpp"
#include "dls/symmetric_eigen.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dls {

enum class FamilyKind
{
	Complete,
	Star,
	CompleteBipartite,
	CompleteMultipartite,
	KnMinusE,
	Path,
	Cycle,
	TuranType,
};

std::string_view to_string(FamilyKind kind);

/// A named graph family with its parameters. Build through the static
/// factories, which validate parameters and canonicalize multipartite parts
/// to non-increasing order.
struct FamilySpec
{
	FamilyKind kind = FamilyKind::Complete;
	int n = 0;
	/// Complete multipartite / bipartite part sizes, sorted non-increasing.
	std::vector<int> parts;
	/// Chromatic number for TuranType.
	int chi = 0;

	static FamilySpec complete(int n);
	static FamilySpec star(int n);
	static FamilySpec complete_bipartite(int a, int b);
	static FamilySpec complete_multipartite(std::vector<int> parts);
	static FamilySpec kn_minus_e(int n);
	static FamilySpec path(int n);
	static FamilySpec cycle(int n);
	/// n - chi parts of size 2 and 2 chi - n singletons; needs n/2 <= chi <= n-1.
	static FamilySpec turan_type(int n, int chi);

	/// Part sizes for the kinds that are complete multipartite by construction;
	/// nullopt for Path and Cycle.
	std::optional<std::vector<int>> multipartite_parts() const;

	std::string describe() const;
};

/// Parses a CLI family name (case-insensitive) and comma-separated integer parameters.
/// Throws InvalidParams.
FamilySpec parse_family(std::string_view name, std::string_view params_csv);

/// Canonical labeled graph. Multipartite kinds assign vertices to parts in order,
/// stars have centre 0, paths and cycles run 0-1-...-(n-1).
Graph generate(const FamilySpec& spec);

/// Closed-form distance Laplacian spectrum of a complete multipartite graph:
/// (n + t_i) with multiplicity t_i - 1 for each part t_i >= 2, then n with
/// multiplicity k - 1, then 0. Needs k >= 2 parts, each >= 1.
Spectrum multipartite_closed_form_spectrum(std::span<const int> parts);

/// Combinatorial structure flags used by the equality characterizations. No spectra involved.
struct StructureTag
{
	bool is_complete = false;
	bool is_star = false;
	bool is_complete_multipartite = false;
	/// Recovered part sizes (sizes of the complement's components), non-increasing.
	std::vector<int> parts;
	bool is_balanced_multipartite = false;
	/// All parts of size 1 or 2 with at least one of size 2; turan_chi is the part count.
	bool is_turan_type = false;
	int turan_chi = 0;
	bool is_K_pp = false;
	bool is_Kn_minus_e = false;

	std::string describe() const;
};

StructureTag classify_structure(const Graph& g);

/// All partitions of n into at least two positive parts, each non-increasing,
/// in reverse lexicographic order.
std::vector<std::vector<int>> multipartite_partitions(int n);

} // namespace dls
