#include "dls/verify.hpp"

#include "dls/errors.hpp"
#include "dls/graph6.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace dls {

namespace {

bool bad(const BoundCheck& c)
{
	return c.applicable && !c.holds;
}

bool mismatched(const BoundCheck& c)
{
	return c.applicable && c.characterized && !c.consistent;
}

} // namespace

int GraphVerdict::violation_count() const
{
	int count = 0;
	for (const auto& c : bounds)
		count += bad(c);
	for (const auto& c : t4_6_extra)
		count += bad(c);
	for (const auto& l : lemmas)
		count += !l.passed;
	if (interlacing && !interlacing->passed())
		++count;
	return count;
}

int GraphVerdict::mismatch_count() const
{
	return static_cast<int>(std::count_if(bounds.begin(), bounds.end(), mismatched));
}

GraphVerdict verify_graph(const Graph& g, const VerifyOptions& opt, std::uint64_t index)
{
	GraphVerdict v;
	v.index = index;
	v.n = g.order();
	if (v.n <= 62)
		v.graph6 = write_graph6(g);

	try {
		const DlapAnalysis a = analyze(g, opt.tol);
		const GraphFacts facts = compute_facts(g);
		v.wiener = a.summary.wiener;
		v.diameter = a.summary.diameter;
		v.tr_max = a.summary.tr_max;
		v.partial_1 = a.partial_1;
		v.partial_n_minus_1 = a.partial_n_minus_1;
		v.dls = a.dls;

		const BoundOptions bopt{opt.tol};
		for (TheoremId id : opt.theorems)
			v.bounds.push_back(evaluate_bound(id, a, facts, bopt));
		if (opt.t4_6_all_k)
			for (auto& c : evaluate_t4_6_all_k(a, facts, bopt))
				if (c.k != facts.chi)
					v.t4_6_extra.push_back(std::move(c));

		for (LemmaId id : opt.lemmas) {
			if (id != LemmaId::L2_5) {
				v.lemmas.push_back(verify_lemma(id, g, a, facts, std::nullopt, opt.tol));
				continue;
			}
			LemmaCheck merged;
			merged.lemma_id = LemmaId::L2_5;
			merged.applicable = false;
			int edges_checked = 0;
			for (const Edge& e : g.edges()) {
				auto check = verify_lemma(id, g, a, facts, e, opt.tol);
				if (!check.applicable)
					continue;
				merged.applicable = true;
				++edges_checked;
				if (!check.passed) {
					merged.passed = false;
					merged.detail = check.detail;
					break;
				}
			}
			if (merged.passed)
				merged.detail = merged.applicable ? std::to_string(edges_checked) + " edge deletion(s) dominate"
												  : "no edge satisfies m >= n with G - e connected";
			v.lemmas.push_back(std::move(merged));
		}

		if (opt.interlacing)
			v.interlacing = interlacing_audit(g, a, opt.tol, facts.alpha);
	} catch (const InternalIdentityFailure& err) {
		v.internal_failure = err.what();
	} catch (const IterationLimit& err) {
		v.internal_failure = err.what();
	}
	return v;
}

void ScanSummary::add(const GraphVerdict& v)
{
	++graphs_scanned;
	if (v.internal_failure) {
		++internal_failures;
		return;
	}
	auto tally_bound = [&](const BoundCheck& c) {
		++checks_run;
		auto& t = per_theorem[std::string(to_string(c.theorem_id))];
		if (!c.applicable) {
			++t.inapplicable;
			if (c.radicand_warning)
				++radicand_warnings;
			return;
		}
		++t.applicable;
		if (c.equality)
			++t.equalities;
		if (!c.holds) {
			++t.violations;
			++violations;
		}
		if (mismatched(c)) {
			++t.mismatches;
			++equality_mismatches;
		}
	};
	for (const auto& c : v.bounds)
		tally_bound(c);
	for (const auto& c : v.t4_6_extra) {
		++checks_run;
		if (bad(c))
			++violations;
	}
	for (const auto& l : v.lemmas) {
		++checks_run;
		if (l.applicable)
			++lemma_applicable[std::string(to_string(l.lemma_id))];
		if (!l.passed)
			++lemma_failures;
	}
	if (v.interlacing) {
		++checks_run;
		if (!v.interlacing->passed())
			++interlacing_failures;
	}
}

void ScanSummary::merge(const ScanSummary& o)
{
	graphs_scanned += o.graphs_scanned;
	checks_run += o.checks_run;
	violations += o.violations;
	equality_mismatches += o.equality_mismatches;
	lemma_failures += o.lemma_failures;
	interlacing_failures += o.interlacing_failures;
	internal_failures += o.internal_failures;
	radicand_warnings += o.radicand_warnings;
	disconnected_skipped += o.disconnected_skipped;
	bad_lines += o.bad_lines;
	for (const auto& [name, t] : o.per_theorem) {
		auto& mine = per_theorem[name];
		mine.applicable += t.applicable;
		mine.inapplicable += t.inapplicable;
		mine.violations += t.violations;
		mine.equalities += t.equalities;
		mine.mismatches += t.mismatches;
	}
	for (const auto& [name, count] : o.lemma_applicable)
		lemma_applicable[name] += count;
}

void run_ordered(const std::function<std::optional<Graph>()>& source,
				 const std::function<GraphVerdict(const Graph&, std::uint64_t)>& work,
				 const std::function<void(GraphVerdict&&)>& sink, int threads, std::size_t batch)
{
	std::uint64_t index = 0;
	if (threads <= 1) {
		while (auto g = source())
			sink(work(*g, index++));
		return;
	}

	std::vector<Graph> inputs;
	std::vector<GraphVerdict> outputs;
	inputs.reserve(batch);
	for (;;) {
		inputs.clear();
		while (inputs.size() < batch) {
			auto g = source();
			if (!g)
				break;
			inputs.push_back(std::move(*g));
		}
		if (inputs.empty())
			return;

		outputs.assign(inputs.size(), GraphVerdict{});
		std::atomic<std::size_t> cursor{0};
		std::exception_ptr failure;
		std::mutex failure_mutex;
		const std::uint64_t base = index;
		auto worker = [&] {
			try {
				for (std::size_t i = cursor++; i < inputs.size(); i = cursor++)
					outputs[i] = work(inputs[i], base + i);
			} catch (...) {
				std::lock_guard lock(failure_mutex);
				if (!failure)
					failure = std::current_exception();
				cursor = inputs.size();
			}
		};
		const int count = std::min<int>(threads, static_cast<int>(inputs.size()));
		std::vector<std::jthread> pool;
		pool.reserve(static_cast<std::size_t>(count));
		for (int t = 0; t < count; ++t)
			pool.emplace_back(worker);
		pool.clear();
		if (failure)
			std::rethrow_exception(failure);

		for (auto& v : outputs)
			sink(std::move(v));
		index += inputs.size();
	}
}

} // namespace dls
