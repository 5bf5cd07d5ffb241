#include "dls/bounds.hpp"

#include "dls/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dls {

namespace {

struct TheoremName
{
	TheoremId id;
	std::string_view name;
};

constexpr std::array<TheoremName, kAllTheorems.size()> kTheoremNames{{
	{TheoremId::T3_1_L, "T3_1_L"},
	{TheoremId::T3_1_U, "T3_1_U"},
	{TheoremId::C3_2, "C3_2"},
	{TheoremId::T3_4_L, "T3_4_L"},
	{TheoremId::T3_4_U, "T3_4_U"},
	{TheoremId::C3_5, "C3_5"},
	{TheoremId::T3_6, "T3_6"},
	{TheoremId::C3_7, "C3_7"},
	{TheoremId::G3_2, "G3_2"},
	{TheoremId::L2_2, "L2_2"},
	{TheoremId::T4_2, "T4_2"},
	{TheoremId::T4_5, "T4_5"},
	{TheoremId::T4_6, "T4_6"},
	{TheoremId::C4_7, "C4_7"},
	{TheoremId::T4_9, "T4_9"},
	{TheoremId::T4_8, "T4_8"},
}};

struct LemmaName
{
	LemmaId id;
	std::string_view name;
};

constexpr std::array<LemmaName, kAllLemmas.size()> kLemmaNames{{
	{LemmaId::L2_1, "L2_1"},
	{LemmaId::L2_3, "L2_3"},
	{LemmaId::L2_5, "L2_5"},
	{LemmaId::L4_3, "L4_3"},
	{LemmaId::L4_4, "L4_4"},
	{LemmaId::EQ3_1, "EQ3_1"},
	{LemmaId::GERSH, "GERSH"},
}};

std::string fmt(double x)
{
	std::ostringstream os;
	os.precision(12);
	os << x;
	return os.str();
}

BoundCheck inapplicable(TheoremId id, Direction dir, std::string reason)
{
	BoundCheck c;
	c.theorem_id = id;
	c.direction = dir;
	c.applicable = false;
	c.reason = std::move(reason);
	return c;
}

BoundCheck compare(TheoremId id, Direction dir, double lhs, double rhs, const Tolerances& tol)
{
	BoundCheck c;
	c.theorem_id = id;
	c.direction = dir;
	c.applicable = true;
	c.lhs = lhs;
	c.rhs = rhs;
	c.slack = rhs - lhs;
	c.equality = std::abs(c.slack) <= tol.eq;
	c.holds = dir == Direction::StrictLower ? c.slack > tol.eq : c.slack >= -tol.eq;
	return c;
}

void characterize(BoundCheck& c, bool family_expected)
{
	c.characterized = true;
	c.equality_family_expected = family_expected;
	c.consistent = !c.applicable || c.equality == family_expected;
}

bool chi_in_turan_range(const GraphFacts& f)
{
	return f.chi && 2 * *f.chi >= f.n && *f.chi <= f.n - 1;
}

} // namespace

std::string_view to_string(TheoremId id)
{
	for (const auto& [tid, name] : kTheoremNames)
		if (tid == id)
			return name;
	return "?";
}

std::string_view to_string(LemmaId id)
{
	for (const auto& [lid, name] : kLemmaNames)
		if (lid == id)
			return name;
	return "?";
}

std::string_view to_string(Direction d)
{
	switch (d) {
	case Direction::Lower: return "lower";
	case Direction::Upper: return "upper";
	case Direction::StrictLower: return "strict-lower";
	}
	return "?";
}

TheoremId parse_theorem_id(std::string_view text)
{
	for (const auto& [tid, name] : kTheoremNames)
		if (name == text)
			return tid;
	throw UnknownTheorem(std::string(text));
}

LemmaId parse_lemma_id(std::string_view text)
{
	for (const auto& [lid, name] : kLemmaNames)
		if (name == text)
			return lid;
	throw UnknownTheorem(std::string(text));
}

GraphFacts compute_facts(const Graph& g)
{
	GraphFacts f;
	f.n = g.order();
	f.max_degree = g.max_degree();
	f.complement_components = connected_components(complement(g)).count;
	f.complement_disconnected = f.complement_components >= 2;
	f.alpha = independence_number(g);
	if (f.n <= kChromaticCap)
		f.chi = chromatic_number(g);
	f.tag = classify_structure(g);
	return f;
}

BoundCheck evaluate_t4_6(const DlapAnalysis& a, const GraphFacts& facts, int k, const BoundOptions& opt)
{
	constexpr auto id = TheoremId::T4_6;
	const int n = a.n;
	if (!facts.complement_disconnected)
		return inapplicable(id, Direction::Lower, "complement is connected");
	if (!facts.chi)
		return inapplicable(id, Direction::Lower, "chromatic number above exactness cap");
	if (k < *facts.chi)
		return inapplicable(id, Direction::Lower, "graph is not " + std::to_string(k) + "-partite");
	if (k > n - 1)
		return inapplicable(id, Direction::Lower, "k = " + std::to_string(k) + " exceeds n-1");

	auto c = compare(id, Direction::Lower, static_cast<double>(n / k), a.dls, opt.tol);
	c.k = k;
	const auto& tag = facts.tag;
	const bool family = tag.is_complete_multipartite && static_cast<int>(tag.parts.size()) == k
						&& tag.is_balanced_multipartite && n % k == 0;
	characterize(c, family);
	return c;
}

std::vector<BoundCheck> evaluate_t4_6_all_k(const DlapAnalysis& a, const GraphFacts& facts, const BoundOptions& opt)
{
	std::vector<BoundCheck> out;
	if (!facts.complement_disconnected || !facts.chi)
		return out;
	for (int k = *facts.chi; k <= a.n - 1; ++k)
		out.push_back(evaluate_t4_6(a, facts, k, opt));
	return out;
}

BoundCheck evaluate_bound(TheoremId id, const DlapAnalysis& a, const GraphFacts& facts, const BoundOptions& opt)
{
	const auto& tol = opt.tol;
	const auto& s = a.summary;
	const double n = a.n;
	const double w = static_cast<double>(s.wiener);
	const double tr_max = static_cast<double>(s.tr_max);
	const bool is_kn = facts.tag.is_complete;

	switch (id) {
	case TheoremId::T3_1_L: {
		if (a.n < 3)
			return inapplicable(id, Direction::Lower, "needs n >= 3 (division by n-2)");
		auto c = compare(id, Direction::Lower, ((n - 1) * (tr_max + 1) - 2 * w) / (n - 2), a.dls, tol);
		characterize(c, is_kn);
		return c;
	}
	case TheoremId::T3_1_U: {
		if (a.n < 3)
			return inapplicable(id, Direction::Upper, "needs n >= 3");
		return compare(id, Direction::Upper, a.dls, 2 * (n - 1) * tr_max - 2 * w, tol);
	}
	case TheoremId::C3_2: {
		if (a.n < 3)
			return inapplicable(id, Direction::Lower, "needs n >= 3 (division by n^2-2n)");
		auto c = compare(id, Direction::Lower, (n * n - n - 2 * w) / (n * n - 2 * n), a.dls, tol);
		characterize(c, is_kn);
		return c;
	}
	case TheoremId::T3_4_L: {
		if (!facts.complement_disconnected)
			return inapplicable(id, Direction::Lower, "complement is connected");
		auto c = compare(id, Direction::Lower, 1 + tr_max - n, a.dls, tol);
		characterize(c, is_kn);
		return c;
	}
	case TheoremId::T3_4_U: {
		if (!facts.complement_disconnected)
			return inapplicable(id, Direction::Upper, "complement is connected");
		return compare(id, Direction::Upper, a.dls, 2 * tr_max - n, tol);
	}
	case TheoremId::C3_5: {
		if (!facts.complement_disconnected)
			return inapplicable(id, Direction::Lower, "complement is connected");
		auto c = compare(id, Direction::Lower, (2 * w - n * (n - 1)) / n, a.dls, tol);
		characterize(c, is_kn);
		return c;
	}
	case TheoremId::T3_6: {
		if (a.n < 3)
			return inapplicable(id, Direction::Lower, "needs n >= 3 (division by n-2)");
		const std::int64_t radicand = s.r1 - (1 + s.tr_max) * (1 + s.tr_max);
		if (radicand < 0) {
			auto c = inapplicable(id, Direction::Lower, "negative radicand R1 - (1+Tr_max)^2 = " + std::to_string(radicand));
			c.radicand_warning = true;
			return c;
		}
		const double bound = 1 + tr_max - std::sqrt(static_cast<double>(radicand) / (n - 2));
		auto c = compare(id, Direction::Lower, bound, a.dls, tol);
		characterize(c, is_kn);
		return c;
	}
	case TheoremId::C3_7: {
		if (a.n < 3)
			return inapplicable(id, Direction::Lower, "needs n >= 3 (division by sqrt(n-2))");
		const std::int64_t nn = a.n;
		const std::int64_t shifted = nn + 2 * s.wiener;
		const std::int64_t radicand = nn * nn * s.r1 - shifted * shifted;
		if (radicand < 0) {
			auto c = inapplicable(id, Direction::Lower, "negative radicand n^2 R1 - (n+2W)^2 = " + std::to_string(radicand));
			c.radicand_warning = true;
			return c;
		}
		const double bound = static_cast<double>(shifted) / n
							 - std::sqrt(static_cast<double>(radicand)) / (n * std::sqrt(n - 2));
		auto c = compare(id, Direction::Lower, bound, a.dls, tol);
		characterize(c, is_kn);
		return c;
	}
	case TheoremId::G3_2:
		return compare(id, Direction::Upper, a.partial_1, 2 * tr_max, tol);
	case TheoremId::L2_2: {
		auto c = compare(id, Direction::Lower, tr_max + 1, a.partial_1, tol);
		characterize(c, is_kn);
		return c;
	}
	case TheoremId::T4_2: {
		const double d = s.diameter;
		return compare(id, Direction::Lower, (2 * n + d * d - 2 * d + 1) / 2 - 2 * w / (n - 1), a.dls, tol);
	}
	case TheoremId::T4_5: {
		if (s.diameter != 2)
			return inapplicable(id, Direction::Lower, "diameter is " + std::to_string(s.diameter) + ", not 2");
		return compare(id, Direction::Lower, facts.max_degree + facts.alpha + 1 - n, a.dls, tol);
	}
	case TheoremId::T4_6: {
		if (!facts.chi)
			return inapplicable(id, Direction::Lower, "chromatic number above exactness cap");
		return evaluate_t4_6(a, facts, *facts.chi, opt);
	}
	case TheoremId::C4_7: {
		const auto& tag = facts.tag;
		if (!(tag.is_complete_multipartite && tag.parts.size() == 2))
			return inapplicable(id, Direction::StrictLower, "not complete bipartite");
		if (a.n % 2 == 0)
			return inapplicable(id, Direction::StrictLower, "n is even");
		return compare(id, Direction::StrictLower, static_cast<double>(a.n / 2), a.dls, tol);
	}
	case TheoremId::T4_9: {
		if (!facts.complement_disconnected)
			return inapplicable(id, Direction::Lower, "complement is connected");
		if (a.n < 4)
			return inapplicable(id, Direction::Lower, "needs n >= 4");
		if (!chi_in_turan_range(facts))
			return inapplicable(id, Direction::Lower, "chi outside [n/2, n-1]");
		auto c = compare(id, Direction::Lower, 2.0, a.dls, tol);
		characterize(c, facts.tag.is_turan_type && facts.tag.turan_chi == *facts.chi);
		return c;
	}
	case TheoremId::T4_8: {
		if (a.n < 4)
			return inapplicable(id, Direction::Lower, "needs n >= 4");
		if (!chi_in_turan_range(facts))
			return inapplicable(id, Direction::Lower, "chi outside [n/2, n-1]");
		auto c = compare(id, Direction::Lower, turan_reference_radius(a.n), a.partial_1, tol);
		characterize(c, facts.tag.is_turan_type && facts.tag.turan_chi == *facts.chi);
		return c;
	}
	}
	throw UnknownTheorem(std::to_string(static_cast<int>(id)));
}

BoundCheck evaluate_bound(TheoremId id, const DlapAnalysis& a, const Graph& g, const BoundOptions& opt)
{
	return evaluate_bound(id, a, compute_facts(g), opt);
}

LemmaCheck verify_lemma(LemmaId id, const Graph& g, std::optional<Edge> e, const Tolerances& tol)
{
	if (id == LemmaId::L2_5 && !e)
		throw MissingEdgeArg();
	const auto a = analyze(g, tol);
	return verify_lemma(id, g, a, compute_facts(g), e, tol);
}

LemmaCheck verify_lemma(LemmaId id, const Graph& g, const DlapAnalysis& a, const GraphFacts& facts,
						std::optional<Edge> e, const Tolerances& tol)
{
	LemmaCheck out;
	out.lemma_id = id;
	const int n = a.n;
	const auto& ev = a.spectrum.values;
	const double scale = std::max(1.0, a.partial_1);

	switch (id) {
	case LemmaId::L2_1: {
		const bool second_is_n = std::abs(a.partial_n_minus_1 - n) <= tol.eq;
		const int expected_mult = facts.complement_components - 1;
		out.passed = second_is_n == facts.complement_disconnected && a.mult_of_n == expected_mult;
		out.detail = "partial_{n-1}=" + fmt(a.partial_n_minus_1) + " complement_components="
					 + std::to_string(facts.complement_components) + " mult(n)=" + std::to_string(a.mult_of_n)
					 + " expected " + std::to_string(expected_mult);
		return out;
	}
	case LemmaId::L2_3: {
		const auto clusters = cluster_multiplicities(a.spectrum, tol.cluster);
		const bool hyp = n >= 4 && std::any_of(clusters.begin(), clusters.end(), [&](const EigenCluster& c) {
							 return c.multiplicity == n - 2 && std::abs(c.value) > tol.cluster;
						 });
		if (!hyp) {
			out.applicable = false;
			out.detail = n < 4 ? "needs n >= 4" : "no nonzero eigenvalue of multiplicity n-2";
			return out;
		}
		// clusters.back() is the zero eigenvalue; the one before it holds partial_{n-1}.
		const int mult_top = clusters.front().multiplicity;
		const int mult_second = clusters[clusters.size() - 2].multiplicity;
		const auto& tag = facts.tag;
		const bool case_i = mult_top == n - 2 && (tag.is_star || tag.is_K_pp);
		const bool case_ii = mult_second == n - 2 && tag.is_Kn_minus_e;
		out.passed = case_i != case_ii;
		out.detail = "m(partial_1)=" + std::to_string(mult_top) + " m(partial_{n-1})=" + std::to_string(mult_second)
					 + " structure=" + tag.describe();
		return out;
	}
	case LemmaId::L2_5: {
		if (!e)
			throw MissingEdgeArg();
		const Graph reduced = delete_edge(g, *e);
		const std::string edge_text = std::to_string(e->u) + "-" + std::to_string(e->v);
		if (g.size() < n) {
			out.applicable = false;
			out.detail = "m < n";
			return out;
		}
		if (!is_connected(reduced)) {
			out.applicable = false;
			out.detail = "G - " + edge_text + " is disconnected";
			return out;
		}
		const auto reduced_spectrum = analyze(reduced, tol).spectrum.values;
		const double margin = tol.eig * std::max(scale, reduced_spectrum.front());
		for (int i = 0; i < n; ++i)
			if (reduced_spectrum[i] < ev[i] - margin) {
				out.passed = false;
				out.detail = "edge " + edge_text + ": eigenvalue " + std::to_string(i + 1) + " drops from " + fmt(ev[i])
							 + " to " + fmt(reduced_spectrum[i]);
				return out;
			}
		out.detail = "edge " + edge_text + ": spectrum dominates";
		return out;
	}
	case LemmaId::L4_3: {
		if (a.summary.diameter > 2) {
			out.applicable = false;
			out.detail = "diameter " + std::to_string(a.summary.diameter) + " > 2";
			return out;
		}
		const auto mu = symmetric_eigenvalues(laplacian_matrix(g)).values;
		double worst = 0.0;
		// partial_i pairs with 2n - mu_{n-i}; zero-based: ev[i] with mu[n-2-i].
		for (int i = 0; i + 1 < n; ++i)
			worst = std::max(worst, std::abs(ev[i] - (2.0 * n - mu[n - 2 - i])));
		out.passed = worst <= tol.eig * std::max(1.0, 2.0 * n);
		out.detail = "max |partial_i - (2n - mu)| = " + fmt(worst);
		return out;
	}
	case LemmaId::L4_4: {
		if (g.size() == 0) {
			out.applicable = false;
			out.detail = "no edges";
			return out;
		}
		const double mu1 = symmetric_eigenvalues(laplacian_matrix(g)).largest();
		const double bound = 1.0 + facts.max_degree;
		const bool holds = mu1 >= bound - tol.eig * std::max(1.0, mu1);
		const bool equality = std::abs(mu1 - bound) <= tol.eq;
		const bool dominating = facts.max_degree == n - 1;
		out.passed = holds && equality == dominating;
		out.detail = "mu_1=" + fmt(mu1) + " 1+Delta=" + fmt(bound) + (dominating ? " Delta=n-1" : " Delta<n-1");
		return out;
	}
	case LemmaId::EQ3_1: {
		const double lhs = a.spectrum.sum_of_squares();
		const double r1 = static_cast<double>(a.summary.r1);
		out.passed = std::abs(lhs - r1) <= tol.eig * std::max(1.0, r1);
		out.detail = "sum partial_i^2=" + fmt(lhs) + " R1=" + fmt(r1);
		return out;
	}
	case LemmaId::GERSH: {
		const auto m = distance_laplacian(a.summary);
		for (double lambda : ev) {
			bool inside = false;
			for (int i = 0; i < n && !inside; ++i)
				inside = std::abs(lambda - m(i, i)) <= m.row_radius(i) + tol.eig * scale;
			if (!inside) {
				out.passed = false;
				out.detail = "eigenvalue " + fmt(lambda) + " outside every Gershgorin disc";
				return out;
			}
		}
		out.detail = "all " + std::to_string(n) + " eigenvalues inside the disc union";
		return out;
	}
	}
	throw UnknownTheorem(std::to_string(static_cast<int>(id)));
}

} // namespace dls
