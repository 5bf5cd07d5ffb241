#pragma once

#include "dls/bounds.hpp"
#include "dls/dlap.hpp"
#include "dls/graph.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dls {

struct VerifyOptions
{
	Tolerances tol;
	std::vector<TheoremId> theorems{kAllTheorems.begin(), kAllTheorems.end()};
	std::vector<LemmaId> lemmas{kAllLemmas.begin(), kAllLemmas.end()};
	/// Evaluate T4_6 at every k in [chi, n-1] instead of only k = chi.
	bool t4_6_all_k = false;
	bool interlacing = true;
};

/// Everything the registry says about one graph.
struct GraphVerdict
{
	std::uint64_t index = 0;
	std::string graph6;
	int n = 0;
	std::int64_t wiener = 0;
	int diameter = 0;
	std::int64_t tr_max = 0;
	double partial_1 = 0.0;
	double partial_n_minus_1 = 0.0;
	double dls = 0.0;
	std::vector<BoundCheck> bounds;
	/// Extra T4_6 instances for k > chi when t4_6_all_k is set.
	std::vector<BoundCheck> t4_6_extra;
	std::vector<LemmaCheck> lemmas;
	std::optional<InterlacingAudit> interlacing;
	/// Set when analyze() failed an internal identity or the eigensolver gave up.
	std::optional<std::string> internal_failure;

	int violation_count() const;
	int mismatch_count() const;
	bool clean() const { return !internal_failure && violation_count() == 0 && mismatch_count() == 0; }
};

/// Runs the selected theorems, lemmas and audits on one connected graph.
/// L2_5 is checked for every edge whose removal keeps the graph connected.
GraphVerdict verify_graph(const Graph& g, const VerifyOptions& opt, std::uint64_t index = 0);

struct TheoremTally
{
	std::uint64_t applicable = 0;
	std::uint64_t inapplicable = 0;
	std::uint64_t violations = 0;
	std::uint64_t equalities = 0;
	std::uint64_t mismatches = 0;
};

/// Order-independent aggregate of verdicts.
struct ScanSummary
{
	std::uint64_t graphs_scanned = 0;
	std::uint64_t checks_run = 0;
	std::uint64_t violations = 0;
	std::uint64_t equality_mismatches = 0;
	std::uint64_t lemma_failures = 0;
	std::uint64_t interlacing_failures = 0;
	std::uint64_t internal_failures = 0;
	std::uint64_t radicand_warnings = 0;
	std::uint64_t disconnected_skipped = 0;
	std::uint64_t bad_lines = 0;
	std::map<std::string, TheoremTally> per_theorem;
	std::map<std::string, std::uint64_t> lemma_applicable;

	void add(const GraphVerdict& v);
	void merge(const ScanSummary& other);
	bool clean() const
	{
		return violations == 0 && equality_mismatches == 0 && lemma_failures == 0 && interlacing_failures == 0
			   && internal_failures == 0;
	}
};

/// Bounded parallel map that hands results to the sink in input order.
/// The source returns nullopt when exhausted. threads <= 1 runs inline.
void run_ordered(const std::function<std::optional<Graph>()>& source,
				 const std::function<GraphVerdict(const Graph&, std::uint64_t)>& work,
				 const std::function<void(GraphVerdict&&)>& sink, int threads, std::size_t batch = 2048);

} // namespace dls
