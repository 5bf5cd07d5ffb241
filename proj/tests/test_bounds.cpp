#include "doctest.h"

#include "dls/bounds.hpp"
#include "dls/errors.hpp"
#include "dls/families.hpp"
#include "dls/graph6.hpp"

#include <cmath>

using namespace dls;

namespace {

BoundCheck check(TheoremId id, const Graph& g)
{
	return evaluate_bound(id, analyze(g), g);
}

} // namespace

TEST_CASE("theorem and lemma ids round-trip")
{
	for (auto id : kAllTheorems)
		CHECK(parse_theorem_id(to_string(id)) == id);
	for (auto id : kAllLemmas)
		CHECK(parse_lemma_id(to_string(id)) == id);
	CHECK_THROWS_AS(parse_theorem_id("T9_9"), UnknownTheorem);
	CHECK_THROWS_AS(parse_lemma_id("L9"), UnknownTheorem);
	CHECK(kAllTheorems.size() == 16);
	CHECK(kAllLemmas.size() == 7);
}

TEST_CASE("T3_1_L")
{
	SUBCASE("K4 attains equality")
	{
		const auto c = check(TheoremId::T3_1_L, generate(FamilySpec::complete(4)));
		CHECK(c.applicable);
		CHECK(std::abs(c.lhs) < 1e-12);
		CHECK(std::abs(c.rhs) < 1e-9);
		CHECK(c.holds);
		CHECK(c.equality);
		CHECK(c.equality_family_expected);
		CHECK(c.consistent);
	}
	SUBCASE("K4 - e is strict")
	{
		const auto c = check(TheoremId::T3_1_L, generate(FamilySpec::kn_minus_e(4)));
		CHECK(c.lhs == doctest::Approx(0.5));
		CHECK(c.rhs == doctest::Approx(2.0));
		CHECK(c.slack == doctest::Approx(1.5));
		CHECK_FALSE(c.equality);
		CHECK_FALSE(c.equality_family_expected);
		CHECK(c.consistent);
	}
}

TEST_CASE("T4_6 on K_{3,3}")
{
	const Graph g = generate(FamilySpec::complete_bipartite(3, 3));
	const auto c = check(TheoremId::T4_6, g);
	CHECK(c.applicable);
	CHECK(c.k == 2);
	CHECK(c.lhs == 3.0);
	CHECK(c.rhs == doctest::Approx(3.0));
	CHECK(c.equality);
	CHECK(c.equality_family_expected);
	CHECK(c.consistent);

	const auto a = analyze(g);
	const auto all = evaluate_t4_6_all_k(a, compute_facts(g));
	REQUIRE(all.size() == 4);
	CHECK(all[0].k == 2);
	CHECK(all[3].k == 5);
	for (const auto& ck : all)
		CHECK(ck.holds);
	CHECK(all[1].lhs == 2.0);
	CHECK_FALSE(all[1].equality_family_expected);
}

TEST_CASE("T4_9 and T4_8 on K4 - e")
{
	const Graph g = generate(FamilySpec::kn_minus_e(4));
	const auto c = check(TheoremId::T4_9, g);
	CHECK(c.applicable);
	CHECK(c.lhs == 2.0);
	CHECK(c.rhs == doctest::Approx(2.0));
	CHECK(c.equality);
	CHECK(c.equality_family_expected);
	CHECK(c.consistent);

	const auto t8 = check(TheoremId::T4_8, g);
	CHECK(t8.applicable);
	CHECK(t8.lhs == 6.0);
	CHECK(t8.rhs == doctest::Approx(6.0));
	CHECK(t8.equality);
	CHECK(t8.consistent);
}

TEST_CASE("T4_8 reference radius matches the generated Turan-type graph")
{
	for (int n = 4; n <= 12; ++n)
		for (int chi = (n + 1) / 2; chi <= n - 1; ++chi) {
			const auto a = analyze(generate(FamilySpec::turan_type(n, chi)));
			CHECK(std::abs(a.partial_1 - turan_reference_radius(n)) <= 1e-8);
		}
}

TEST_CASE("C4_7 on K_{5,4}")
{
	const auto c = check(TheoremId::C4_7, generate(FamilySpec::complete_bipartite(5, 4)));
	CHECK(c.applicable);
	CHECK(c.direction == Direction::StrictLower);
	CHECK(c.lhs == 4.0);
	CHECK(c.rhs == doctest::Approx(5.0));
	CHECK(c.holds);
	CHECK_FALSE(check(TheoremId::C4_7, generate(FamilySpec::complete_bipartite(3, 3))).applicable);
	CHECK_FALSE(check(TheoremId::C4_7, generate(FamilySpec::cycle(5))).applicable);
}

TEST_CASE("K2 degenerate order")
{
	const Graph k2 = parse_graph6("A_");
	for (auto id : {TheoremId::T3_1_L, TheoremId::T3_1_U, TheoremId::C3_2, TheoremId::T3_6, TheoremId::C3_7}) {
		const auto c = check(id, k2);
		CHECK_FALSE(c.applicable);
		CHECK(c.holds);
		CHECK_FALSE(c.reason.empty());
	}
	for (auto id : {TheoremId::L2_2, TheoremId::G3_2, TheoremId::T4_2}) {
		const auto c = check(id, k2);
		CHECK(c.applicable);
		CHECK(c.holds);
	}
}

TEST_CASE("C3_7 with a plus sign under the root holds but is never tight at K_n")
{
	for (int n = 3; n <= 10; ++n) {
		const Graph g = generate(FamilySpec::complete(n));
		const auto a = analyze(g);
		const double w2 = 2.0 * a.summary.wiener;
		const double r1 = static_cast<double>(a.summary.r1);
		const double plus = (n + w2) / n - std::sqrt(n * n * r1 + (n + w2) * (n + w2)) / (n * std::sqrt(n - 2.0));
		CHECK(plus < a.dls - 0.5);
		const auto c = evaluate_bound(TheoremId::C3_7, a, g);
		CHECK(c.equality);
	}
}

TEST_CASE("T3_6 radicand is never negative on small graphs")
{
	for (int n = 3; n <= 6; ++n) {
		LabeledConnectedEnumerator en(n);
		while (auto g = en.next()) {
			const auto a = analyze(*g);
			REQUIRE(a.summary.r1 >= (1 + a.summary.tr_max) * (1 + a.summary.tr_max));
			REQUIRE_FALSE(evaluate_bound(TheoremId::T3_6, a, *g).radicand_warning);
		}
	}
}

TEST_CASE("applicability gates")
{
	const Graph p5 = generate(FamilySpec::path(5));
	CHECK_FALSE(check(TheoremId::T3_4_L, p5).applicable);
	CHECK_FALSE(check(TheoremId::T4_5, p5).applicable);
	CHECK_FALSE(check(TheoremId::T4_6, p5).applicable);
	CHECK(check(TheoremId::T4_5, generate(FamilySpec::cycle(5))).applicable);
	CHECK_FALSE(check(TheoremId::T4_9, generate(FamilySpec::complete(3))).applicable);
	CHECK_FALSE(check(TheoremId::T4_6, generate(FamilySpec::complete(4))).applicable);
	CHECK(check(TheoremId::T3_4_U, generate(FamilySpec::star(5))).holds);
}

TEST_CASE("lemma examples")
{
	const Graph s5 = generate(FamilySpec::star(5));
	const auto l21 = verify_lemma(LemmaId::L2_1, s5);
	CHECK(l21.applicable);
	CHECK(l21.passed);

	const Graph c4 = generate(FamilySpec::cycle(4));
	CHECK(verify_lemma(LemmaId::L4_3, c4).passed);
	const auto l25 = verify_lemma(LemmaId::L2_5, c4, Edge{0, 1});
	CHECK(l25.applicable);
	CHECK(l25.passed);

	CHECK_THROWS_AS(verify_lemma(LemmaId::L2_5, c4), MissingEdgeArg);
	CHECK_THROWS_AS(verify_lemma(LemmaId::L2_5, c4, Edge{0, 2}), EdgeAbsent);
	CHECK_FALSE(verify_lemma(LemmaId::L2_5, generate(FamilySpec::path(4)), Edge{1, 2}).applicable);

	const auto l23 = verify_lemma(LemmaId::L2_3, s5);
	CHECK(l23.applicable);
	CHECK(l23.passed);
	CHECK(verify_lemma(LemmaId::L2_3, generate(FamilySpec::kn_minus_e(6))).passed);
	CHECK(verify_lemma(LemmaId::L2_3, generate(FamilySpec::complete_bipartite(4, 4))).passed);
	CHECK_FALSE(verify_lemma(LemmaId::L2_3, generate(FamilySpec::complete(3))).applicable);

	for (auto id : {LemmaId::L4_4, LemmaId::EQ3_1, LemmaId::GERSH})
		CHECK(verify_lemma(id, c4).passed);
}

TEST_CASE("every bound holds on all connected graphs with n <= 6")
{
	for (int n = 2; n <= 6; ++n) {
		LabeledConnectedEnumerator en(n);
		while (auto g = en.next()) {
			const auto a = analyze(*g);
			const auto facts = compute_facts(*g);
			for (auto id : kAllTheorems) {
				const auto c = evaluate_bound(id, a, facts);
				INFO(to_string(id), " ", write_graph6(*g));
				REQUIRE(c.holds);
				REQUIRE(c.consistent);
				if (!c.applicable)
					continue;
				REQUIRE(c.slack == doctest::Approx(c.rhs - c.lhs));
			}
			for (const auto& c : evaluate_t4_6_all_k(a, facts))
				REQUIRE(c.holds);
			for (auto id : kAllLemmas) {
				if (id == LemmaId::L2_5)
					continue;
				const auto l = verify_lemma(id, *g, a, facts);
				INFO(to_string(id), " ", write_graph6(*g), " ", l.detail);
				REQUIRE(l.passed);
			}
		}
	}
}
