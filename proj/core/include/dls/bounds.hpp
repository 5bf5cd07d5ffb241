#pragma once

#include "dls/dlap.hpp"
#include "dls/families.hpp"
#include "dls/graph.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dls {

/// Stable identifiers of the bound checkers. The names double as CLI and report vocabulary.
enum class TheoremId
{
	T3_1_L, // ((n-1)(Tr_max+1) - 2W)/(n-2) <= DLS
	T3_1_U, // DLS <= 2(n-1)Tr_max - 2W
	C3_2,   // (n^2 - n - 2W)/(n^2 - 2n) <= DLS
	T3_4_L, // 1 + Tr_max - n <= DLS, complement disconnected
	T3_4_U, // DLS <= 2 Tr_max - n, complement disconnected
	C3_5,   // (2W - n(n-1))/n <= DLS, complement disconnected
	T3_6,   // 1 + Tr_max - sqrt((R1 - (1+Tr_max)^2)/(n-2)) <= DLS
	C3_7,   // (n+2W)/n - sqrt(n^2 R1 - (n+2W)^2)/(n sqrt(n-2)) <= DLS
	G3_2,   // spectral radius <= 2 Tr_max
	L2_2,   // Tr_max + 1 <= spectral radius
	T4_2,   // (2n + d^2 - 2d + 1)/2 - 2W/(n-1) <= DLS
	T4_5,   // Delta + alpha + 1 - n <= DLS, diameter 2
	T4_6,   // floor(n/k) <= DLS, k-partite with disconnected complement
	C4_7,   // floor(n/2) < DLS, complete bipartite with n odd
	T4_9,   // 2 <= DLS, n/2 <= chi <= n-1, complement disconnected
	T4_8,   // n + 2 <= spectral radius, n/2 <= chi <= n-1
};

enum class LemmaId
{
	L2_1,  // second-smallest eigenvalue is n iff the complement is disconnected
	L2_3,  // multiplicity n-2 eigenvalue forces S_n, K_pp or K_n - e
	L2_5,  // deleting an edge never lowers any eigenvalue
	L4_3,  // diameter <= 2: nonzero spectrum is {2n - mu_i}
	L4_4,  // mu_1 >= 1 + Delta, equality iff Delta = n-1
	EQ3_1, // sum of squared eigenvalues equals R1
	GERSH, // eigenvalues lie in the Gershgorin discs
};

inline constexpr std::array kAllTheorems{
	TheoremId::T3_1_L, TheoremId::T3_1_U, TheoremId::C3_2, TheoremId::T3_4_L, TheoremId::T3_4_U, TheoremId::C3_5,
	TheoremId::T3_6,   TheoremId::C3_7,   TheoremId::G3_2, TheoremId::L2_2,   TheoremId::T4_2,   TheoremId::T4_5,
	TheoremId::T4_6,   TheoremId::C4_7,   TheoremId::T4_9, TheoremId::T4_8,
};

inline constexpr std::array kAllLemmas{
	LemmaId::L2_1, LemmaId::L2_3, LemmaId::L2_5, LemmaId::L4_3, LemmaId::L4_4, LemmaId::EQ3_1, LemmaId::GERSH,
};

/// Theorems whose equality case is characterized by a graph family and audited.
inline constexpr std::array kCharacterizedTheorems{
	TheoremId::T3_1_L, TheoremId::C3_2, TheoremId::T3_4_L, TheoremId::C3_5, TheoremId::T3_6,
	TheoremId::C3_7,   TheoremId::L2_2, TheoremId::T4_6,   TheoremId::T4_9, TheoremId::T4_8,
};

std::string_view to_string(TheoremId id);
std::string_view to_string(LemmaId id);

/// Throws UnknownTheorem.
TheoremId parse_theorem_id(std::string_view text);
LemmaId parse_lemma_id(std::string_view text);

enum class Direction
{
	Lower,
	Upper,
	StrictLower,
};

std::string_view to_string(Direction d);

/// One theorem applied to one graph.
///
/// lhs and rhs follow the written inequality, lhs <= rhs (lhs < rhs for strict bounds);
/// for a lower bound lhs is the bound and rhs the bounded quantity, for an upper bound
/// the other way round. slack = rhs - lhs.
struct BoundCheck
{
	TheoremId theorem_id = TheoremId::T3_1_L;
	bool applicable = false;
	std::string reason; // why not applicable, or a warning
	double lhs = 0.0;
	double rhs = 0.0;
	Direction direction = Direction::Lower;
	double slack = 0.0;
	bool holds = true;
	bool equality = false;
	/// The theorem states an equality characterization that is audited.
	bool characterized = false;
	bool equality_family_expected = false;
	/// equality == equality_family_expected when characterized, true otherwise.
	bool consistent = true;
	/// T3_6 / C3_7 radicand was negative (reported as inapplicable).
	bool radicand_warning = false;
	/// The k used by T4_6; 0 elsewhere.
	int k = 0;
};

struct LemmaCheck
{
	LemmaId lemma_id = LemmaId::L2_1;
	/// False when the lemma's hypothesis does not hold; passed is then vacuously true.
	bool applicable = true;
	bool passed = true;
	std::string detail;
};

/// Exact combinatorial facts about a graph that the checkers consume.
struct GraphFacts
{
	int n = 0;
	int max_degree = 0;
	int complement_components = 0;
	bool complement_disconnected = false;
	int alpha = 0;
	/// Unset for n above the chromatic exactness cap.
	std::optional<int> chi;
	StructureTag tag;
};

GraphFacts compute_facts(const Graph& g);

struct BoundOptions
{
	Tolerances tol;
};

/// Evaluates one theorem. a must be analyze(g).
BoundCheck evaluate_bound(TheoremId id, const DlapAnalysis& a, const Graph& g, const BoundOptions& opt = {});
BoundCheck evaluate_bound(TheoremId id, const DlapAnalysis& a, const GraphFacts& facts, const BoundOptions& opt = {});

/// T4_6 at an explicit k. G is k-partite for every k >= chi, so every k in
/// [chi, n-1] is a valid instance.
BoundCheck evaluate_t4_6(const DlapAnalysis& a, const GraphFacts& facts, int k, const BoundOptions& opt = {});

/// T4_6 for every k in [chi, n-1]; empty when not applicable.
std::vector<BoundCheck> evaluate_t4_6_all_k(const DlapAnalysis& a, const GraphFacts& facts,
											const BoundOptions& opt = {});

/// Verifies one lemma on a connected graph. L2_5 needs e (MissingEdgeArg otherwise)
/// and e must be an edge of g (EdgeAbsent otherwise).
LemmaCheck verify_lemma(LemmaId id, const Graph& g, std::optional<Edge> e = std::nullopt, const Tolerances& tol = {});
LemmaCheck verify_lemma(LemmaId id, const Graph& g, const DlapAnalysis& a, const GraphFacts& facts,
						std::optional<Edge> e = std::nullopt, const Tolerances& tol = {});

/// Largest distance Laplacian eigenvalue of the TuranType(n, chi) graph; n + 2 in closed form.
inline double turan_reference_radius(int n)
{
	return static_cast<double>(n + 2);
}

} // namespace dls
