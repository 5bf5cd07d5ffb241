#include "report.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace dls::cli {

std::string format_double(double x)
{
	char buf[64];
	const auto res = std::to_chars(buf, buf + sizeof buf, x);
	return std::string(buf, res.ptr);
}

std::string format_text(double x)
{
	if (std::abs(x) < 5e-11)
		x = 0.0;
	std::ostringstream os;
	os << std::setprecision(10) << x;
	return os.str();
}

namespace {

Json number_or_null(bool present, double x)
{
	return present ? Json(x) : Json(nullptr);
}

std::string bool_field(bool b)
{
	return b ? "1" : "0";
}

std::string theorem_list(const std::vector<TheoremId>& ids)
{
	std::string out;
	for (auto id : ids) {
		if (!out.empty())
			out += ',';
		out += to_string(id);
	}
	return out;
}

std::string lemma_list(const std::vector<LemmaId>& ids)
{
	std::string out;
	for (auto id : ids) {
		if (!out.empty())
			out += ',';
		out += to_string(id);
	}
	return out;
}

} // namespace

Json metadata_json(const RunMetadata& meta)
{
	Json j;
	j["command"] = meta.command;
	j["source"] = meta.source;
	j["eig_tol"] = meta.verify.tol.eig;
	j["eq_tol"] = meta.verify.tol.eq;
	j["cluster_tol"] = meta.verify.tol.cluster;
	Json th = Json::array();
	for (auto id : meta.verify.theorems)
		th.push_back(std::string(to_string(id)));
	j["theorems"] = th;
	Json lm = Json::array();
	for (auto id : meta.verify.lemmas)
		lm.push_back(std::string(to_string(id)));
	j["lemmas"] = lm;
	j["t4_6_all_k"] = meta.verify.t4_6_all_k;
	j["interlacing"] = meta.verify.interlacing;
	return j;
}

Json bound_json(const BoundCheck& c)
{
	Json j;
	j["theorem"] = std::string(to_string(c.theorem_id));
	j["applicable"] = c.applicable;
	j["reason"] = c.reason;
	j["direction"] = std::string(to_string(c.direction));
	j["lhs"] = number_or_null(c.applicable, c.lhs);
	j["rhs"] = number_or_null(c.applicable, c.rhs);
	j["slack"] = number_or_null(c.applicable, c.slack);
	j["holds"] = c.holds;
	j["equality"] = c.equality;
	j["characterized"] = c.characterized;
	j["equality_family_expected"] = c.equality_family_expected;
	j["consistent"] = c.consistent;
	j["radicand_warning"] = c.radicand_warning;
	if (c.theorem_id == TheoremId::T4_6)
		j["k"] = c.k;
	return j;
}

Json lemma_json(const LemmaCheck& l)
{
	Json j;
	j["lemma"] = std::string(to_string(l.lemma_id));
	j["applicable"] = l.applicable;
	j["passed"] = l.passed;
	j["detail"] = l.detail;
	return j;
}

Json interlacing_json(const InterlacingAudit& a)
{
	Json j;
	j["pairs_checked"] = a.pairs_checked;
	j["worst_slack"] = a.worst_slack;
	j["worst_pair"] = Json::array({a.worst_u, a.worst_v});
	j["pairs_ok"] = a.pairs_ok;
	j["diameter_path_bound"] = a.diameter_path_bound;
	j["diameter_path_ok"] = a.diameter_path_ok;
	j["independence_applicable"] = a.independence_applicable;
	j["independence_bound"] = number_or_null(a.independence_applicable, a.independence_bound);
	j["independence_ok"] = a.independence_ok;
	j["passed"] = a.passed();
	return j;
}

Json verdict_json(const GraphVerdict& v)
{
	Json j;
	j["index"] = v.index;
	j["graph6"] = v.graph6;
	j["n"] = v.n;
	const bool ok = !v.internal_failure;
	j["wiener"] = ok ? Json(v.wiener) : Json(nullptr);
	j["diameter"] = ok ? Json(v.diameter) : Json(nullptr);
	j["tr_max"] = ok ? Json(v.tr_max) : Json(nullptr);
	j["partial_1"] = number_or_null(ok, v.partial_1);
	j["partial_n_minus_1"] = number_or_null(ok, v.partial_n_minus_1);
	j["dls"] = number_or_null(ok, v.dls);
	Json bounds = Json::array();
	for (const auto& c : v.bounds)
		bounds.push_back(bound_json(c));
	j["bounds"] = bounds;
	if (!v.t4_6_extra.empty()) {
		Json extra = Json::array();
		for (const auto& c : v.t4_6_extra)
			extra.push_back(bound_json(c));
		j["t4_6_extra"] = extra;
	}
	Json lemmas = Json::array();
	for (const auto& l : v.lemmas)
		lemmas.push_back(lemma_json(l));
	j["lemmas"] = lemmas;
	j["interlacing"] = v.interlacing ? interlacing_json(*v.interlacing) : Json(nullptr);
	j["internal_failure"] = v.internal_failure ? Json(*v.internal_failure) : Json(nullptr);
	j["violations"] = v.violation_count();
	j["mismatches"] = v.mismatch_count();
	return j;
}

Json summary_json(const ScanSummary& s)
{
	Json j;
	j["graphs_scanned"] = s.graphs_scanned;
	j["checks_run"] = s.checks_run;
	j["violations"] = s.violations;
	j["equality_mismatches"] = s.equality_mismatches;
	j["lemma_failures"] = s.lemma_failures;
	j["interlacing_failures"] = s.interlacing_failures;
	j["internal_failures"] = s.internal_failures;
	j["radicand_warnings"] = s.radicand_warnings;
	j["disconnected_skipped"] = s.disconnected_skipped;
	j["bad_lines"] = s.bad_lines;
	Json per = Json::object();
	for (const auto& [name, t] : s.per_theorem)
		per[name] = Json{{"applicable", t.applicable},
						 {"inapplicable", t.inapplicable},
						 {"violations", t.violations},
						 {"equalities", t.equalities},
						 {"mismatches", t.mismatches}};
	j["per_theorem"] = per;
	Json lem = Json::object();
	for (const auto& [name, count] : s.lemma_applicable)
		lem[name] = count;
	j["lemma_applicable"] = lem;
	j["clean"] = s.clean();
	return j;
}

std::vector<std::string> csv_header(const RunMetadata& meta)
{
	std::vector<std::string> h{"index", "graph6", "n", "wiener", "diameter", "tr_max", "partial_1", "partial_n_minus_1",
							   "dls"};
	for (auto id : meta.verify.theorems) {
		const std::string p(to_string(id));
		for (const char* f : {"_applicable", "_lhs", "_rhs", "_slack", "_holds", "_equality", "_consistent"})
			h.push_back(p + f);
	}
	for (auto id : meta.verify.lemmas) {
		const std::string p(to_string(id));
		h.push_back(p + "_applicable");
		h.push_back(p + "_passed");
	}
	if (meta.verify.t4_6_all_k)
		h.push_back("T4_6_extra_violations");
	if (meta.verify.interlacing) {
		h.push_back("interlacing_worst_slack");
		h.push_back("interlacing_passed");
	}
	h.push_back("violations");
	h.push_back("mismatches");
	h.push_back("internal_failure");
	return h;
}

std::vector<std::string> csv_fields(const GraphVerdict& v, const RunMetadata& meta)
{
	const bool ok = !v.internal_failure;
	auto num = [&](double x) { return ok ? format_double(x) : std::string(); };
	std::vector<std::string> f{std::to_string(v.index),
							   v.graph6,
							   std::to_string(v.n),
							   ok ? std::to_string(v.wiener) : "",
							   ok ? std::to_string(v.diameter) : "",
							   ok ? std::to_string(v.tr_max) : "",
							   num(v.partial_1),
							   num(v.partial_n_minus_1),
							   num(v.dls)};
	for (std::size_t i = 0; i < meta.verify.theorems.size(); ++i) {
		if (i >= v.bounds.size()) {
			f.insert(f.end(), 7, "");
			continue;
		}
		const auto& c = v.bounds[i];
		f.push_back(bool_field(c.applicable));
		f.push_back(c.applicable ? format_double(c.lhs) : "");
		f.push_back(c.applicable ? format_double(c.rhs) : "");
		f.push_back(c.applicable ? format_double(c.slack) : "");
		f.push_back(bool_field(c.holds));
		f.push_back(bool_field(c.equality));
		f.push_back(bool_field(c.consistent));
	}
	for (std::size_t i = 0; i < meta.verify.lemmas.size(); ++i) {
		if (i >= v.lemmas.size()) {
			f.insert(f.end(), 2, "");
			continue;
		}
		f.push_back(bool_field(v.lemmas[i].applicable));
		f.push_back(bool_field(v.lemmas[i].passed));
	}
	if (meta.verify.t4_6_all_k) {
		int bad = 0;
		for (const auto& c : v.t4_6_extra)
			bad += c.applicable && !c.holds;
		f.push_back(std::to_string(bad));
	}
	if (meta.verify.interlacing) {
		f.push_back(v.interlacing ? format_double(v.interlacing->worst_slack) : "");
		f.push_back(v.interlacing ? bool_field(v.interlacing->passed()) : "");
	}
	f.push_back(std::to_string(v.violation_count()));
	f.push_back(std::to_string(v.mismatch_count()));
	f.push_back(v.internal_failure.value_or(""));
	return f;
}

void write_csv_line(std::ostream& out, const std::vector<std::string>& fields)
{
	for (std::size_t i = 0; i < fields.size(); ++i) {
		if (i)
			out << ',';
		const auto& s = fields[i];
		if (s.find_first_of(",\"\n") == std::string::npos) {
			out << s;
			continue;
		}
		out << '"';
		for (char c : s) {
			if (c == '"')
				out << '"';
			out << c;
		}
		out << '"';
	}
	out << '\n';
}

void write_csv_metadata(std::ostream& out, const RunMetadata& meta)
{
	out << "# command=" << meta.command << '\n';
	out << "# source=" << meta.source << '\n';
	out << "# eig_tol=" << format_double(meta.verify.tol.eig) << " eq_tol=" << format_double(meta.verify.tol.eq)
		<< " cluster_tol=" << format_double(meta.verify.tol.cluster) << '\n';
	out << "# theorems=" << theorem_list(meta.verify.theorems) << '\n';
	out << "# lemmas=" << lemma_list(meta.verify.lemmas) << '\n';
}

std::string text_row(const GraphVerdict& v)
{
	std::ostringstream os;
	os << std::setw(8) << v.index << "  " << std::left << std::setw(12) << v.graph6 << std::right << " n=" << v.n;
	if (v.internal_failure) {
		os << "  INTERNAL FAILURE: " << *v.internal_failure;
		return os.str();
	}
	os << " W=" << v.wiener << " d=" << v.diameter << " Trmax=" << v.tr_max << " d1=" << format_text(v.partial_1)
	   << " dn-1=" << format_text(v.partial_n_minus_1) << " DLS=" << format_text(v.dls);
	const int bad = v.violation_count();
	const int mis = v.mismatch_count();
	if (bad == 0 && mis == 0)
		os << "  ok";
	else
		os << "  violations=" << bad << " mismatches=" << mis;
	return os.str();
}

void write_bounds_text(std::ostream& out, const GraphVerdict& v)
{
	out << "bounds\n";
	auto line = [&](const BoundCheck& c) {
		out << "  " << std::left << std::setw(8) << to_string(c.theorem_id) << std::right;
		if (!c.applicable) {
			out << "n/a  " << c.reason << '\n';
			return;
		}
		out << std::left << std::setw(12) << to_string(c.direction) << std::right;
		if (c.theorem_id == TheoremId::T4_6)
			out << "k=" << c.k << "  ";
		out << "lhs=" << format_text(c.lhs) << "  rhs=" << format_text(c.rhs) << "  slack=" << format_text(c.slack)
			<< "  " << (c.holds ? "holds" : "VIOLATED");
		if (c.equality)
			out << " equality";
		if (c.characterized)
			out << (c.consistent ? " consistent" : " MISMATCH");
		out << '\n';
	};
	for (const auto& c : v.bounds)
		line(c);
	for (const auto& c : v.t4_6_extra)
		line(c);
	if (!v.lemmas.empty())
		out << "lemmas\n";
	for (const auto& l : v.lemmas) {
		out << "  " << std::left << std::setw(8) << to_string(l.lemma_id) << std::right;
		if (!l.applicable)
			out << "n/a     ";
		else
			out << (l.passed ? "passed  " : "FAILED  ");
		out << l.detail << '\n';
	}
	if (v.interlacing) {
		const auto& a = *v.interlacing;
		out << "interlacing\n"
			<< "  pairs=" << a.pairs_checked << "  worst_slack=" << format_text(a.worst_slack) << " at (" << a.worst_u
			<< "," << a.worst_v << ")\n"
			<< "  path bound " << format_text(a.diameter_path_bound) << (a.diameter_path_ok ? " ok" : " VIOLATED") << '\n';
		if (a.independence_applicable)
			out << "  n+alpha bound " << format_text(a.independence_bound) << (a.independence_ok ? " ok" : " VIOLATED")
				<< '\n';
		out << "  " << (a.passed() ? "passed" : "FAILED") << '\n';
	}
}

void write_summary_text(std::ostream& out, const ScanSummary& s)
{
	out << "summary\n"
		<< "  graphs scanned        " << s.graphs_scanned << '\n'
		<< "  checks run            " << s.checks_run << '\n'
		<< "  violations            " << s.violations << '\n'
		<< "  equality mismatches   " << s.equality_mismatches << '\n'
		<< "  lemma failures        " << s.lemma_failures << '\n'
		<< "  interlacing failures  " << s.interlacing_failures << '\n'
		<< "  internal failures     " << s.internal_failures << '\n'
		<< "  radicand warnings     " << s.radicand_warnings << '\n'
		<< "  disconnected skipped  " << s.disconnected_skipped << '\n'
		<< "  bad lines             " << s.bad_lines << '\n';
	if (s.per_theorem.empty())
		return;
	out << "  theorem   applicable  n/a       equalities  violations  mismatches\n";
	for (const auto& [name, t] : s.per_theorem)
		out << "  " << std::left << std::setw(10) << name << std::right << std::setw(10) << t.applicable << std::setw(10)
			<< t.inapplicable << std::setw(12) << t.equalities << std::setw(12) << t.violations << std::setw(12)
			<< t.mismatches << '\n';
}

int report_violations(std::ostream& err, const GraphVerdict& v, const std::string& where)
{
	int lines = 0;
	const std::string head = where + " graph6=" + v.graph6 + " ";
	if (v.internal_failure) {
		err << "internal failure: " << head << *v.internal_failure << '\n';
		return 1;
	}
	auto bound = [&](const BoundCheck& c) {
		if (!c.applicable)
			return;
		if (!c.holds) {
			err << "violation: " << head << to_string(c.theorem_id) << " lhs=" << format_double(c.lhs)
				<< " rhs=" << format_double(c.rhs) << " slack=" << format_double(c.slack);
			if (c.theorem_id == TheoremId::T4_6)
				err << " k=" << c.k;
			err << '\n';
			++lines;
		}
		if (c.characterized && !c.consistent) {
			err << "equality mismatch: " << head << to_string(c.theorem_id) << " equality=" << c.equality
				<< " family_expected=" << c.equality_family_expected << " slack=" << format_double(c.slack) << '\n';
			++lines;
		}
	};
	for (const auto& c : v.bounds)
		bound(c);
	for (const auto& c : v.t4_6_extra)
		bound(c);
	for (const auto& l : v.lemmas)
		if (!l.passed) {
			err << "lemma failure: " << head << to_string(l.lemma_id) << ' ' << l.detail << '\n';
			++lines;
		}
	if (v.interlacing && !v.interlacing->passed()) {
		err << "interlacing failure: " << head << "worst_slack=" << format_double(v.interlacing->worst_slack) << '\n';
		++lines;
	}
	return lines;
}

} // namespace dls::cli
