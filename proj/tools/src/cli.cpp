#include "dls/cli.hpp"

#include "dls/errors.hpp"
#include "dls/families.hpp"
#include "dls/graph6.hpp"
#include "report.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

namespace dls::cli {

namespace {

struct InputError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

struct CommonFlags
{
	bool json = false;
	bool csv = false;
	double eig_tol = 1e-8;
	double eq_tol = 1e-6;
	double cluster_tol = 1e-6;
	std::string theorems = "all";
	std::string lemmas = "all";
	bool no_interlacing = false;
	bool t4_6_all_k = false;
};

void add_common(CLI::App* app, CommonFlags& f)
{
	auto* json = app->add_flag("--json", f.json, "JSON output");
	app->add_flag("--csv", f.csv, "CSV output")->excludes(json);
	app->add_option("--eig-tol", f.eig_tol, "identity tolerance")->check(CLI::PositiveNumber)->capture_default_str();
	app->add_option("--eq-tol", f.eq_tol, "equality tolerance on slack")->check(CLI::PositiveNumber)->capture_default_str();
	app->add_option("--cluster-tol", f.cluster_tol, "eigenvalue clustering tolerance")
		->check(CLI::PositiveNumber)
		->capture_default_str();
	app->add_option("--theorems", f.theorems, "comma-separated theorem ids, 'all' or 'none'")->capture_default_str();
	app->add_option("--lemmas", f.lemmas, "comma-separated lemma ids, 'all' or 'none'")->capture_default_str();
	app->add_flag("--no-interlacing", f.no_interlacing, "skip the interlacing audit");
	app->add_flag("--t4-6-all-k", f.t4_6_all_k, "evaluate T4_6 at every k in [chi, n-1]");
}

std::vector<std::string> split_csv(const std::string& text)
{
	std::vector<std::string> out;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ',')) {
		item.erase(0, item.find_first_not_of(" \t"));
		item.erase(item.find_last_not_of(" \t") + 1);
		if (!item.empty())
			out.push_back(item);
	}
	return out;
}

template <typename Id, std::size_t N, typename Parse>
std::vector<Id> select_ids(const std::string& text, const std::array<Id, N>& all, Parse parse)
{
	if (text == "all")
		return {all.begin(), all.end()};
	if (text == "none")
		return {};
	std::vector<Id> out;
	for (const auto& name : split_csv(text)) {
		const Id id = parse(name);
		if (std::find(out.begin(), out.end(), id) == out.end())
			out.push_back(id);
	}
	return out;
}

Format format_of(const CommonFlags& f)
{
	return f.json ? Format::Json : f.csv ? Format::Csv : Format::Text;
}

RunMetadata make_metadata(const std::string& command, const std::string& source, const CommonFlags& f)
{
	RunMetadata meta;
	meta.command = command;
	meta.source = source;
	meta.verify.tol = Tolerances{f.eig_tol, f.eq_tol, f.cluster_tol};
	meta.verify.theorems = select_ids(f.theorems, kAllTheorems, [](const std::string& s) { return parse_theorem_id(s); });
	meta.verify.lemmas = select_ids(f.lemmas, kAllLemmas, [](const std::string& s) { return parse_lemma_id(s); });
	meta.verify.interlacing = !f.no_interlacing;
	meta.verify.t4_6_all_k = f.t4_6_all_k;
	return meta;
}

Graph parse_input(const std::string& input, int n_hint)
{
	if (input.find('-') != std::string::npos)
		return parse_edge_list(input, n_hint);
	return parse_graph6(input);
}

Edge parse_edge(const std::string& text)
{
	const Graph g = parse_edge_list(text);
	const auto edges = g.edges();
	if (edges.size() != 1)
		throw InvalidParams("--edge expects a single pair u-v");
	return edges.front();
}

std::string spectrum_text(const DlapAnalysis& a, double cluster_tol)
{
	std::string out;
	for (const auto& c : cluster_multiplicities(a.spectrum, cluster_tol)) {
		if (!out.empty())
			out += ' ';
		out += format_text(c.value);
		if (c.multiplicity > 1)
			out += '^' + std::to_string(c.multiplicity);
	}
	return out;
}

Json structure_json(const StructureTag& t)
{
	Json j;
	j["describe"] = t.describe();
	j["complete"] = t.is_complete;
	j["star"] = t.is_star;
	j["complete_multipartite"] = t.is_complete_multipartite;
	j["parts"] = t.parts;
	j["balanced_multipartite"] = t.is_balanced_multipartite;
	j["turan_type"] = t.is_turan_type;
	j["turan_chi"] = t.turan_chi;
	j["K_pp"] = t.is_K_pp;
	j["Kn_minus_e"] = t.is_Kn_minus_e;
	return j;
}

struct ClosedForm
{
	std::vector<double> values;
	double max_abs_delta = 0.0;
};

/// Full single-graph report shared by analyze and family.
int single_graph(const Graph& g, const std::string& input, const RunMetadata& meta, Format fmt,
				 const std::optional<Edge>& edge, const std::optional<FamilySpec>& family, std::ostream& out,
				 std::ostream& err)
{
	if (!is_connected(g)) {
		err << "error: graph is disconnected (" << connected_components(g).count << " components)\n";
		return kInputError;
	}
	const Tolerances& tol = meta.verify.tol;
	DlapAnalysis a;
	try {
		a = analyze(g, tol);
	} catch (const InternalIdentityFailure& e) {
		err << "internal failure: " << e.what() << '\n';
		return kViolations;
	}
	GraphVerdict v = verify_graph(g, meta.verify, 0);
	const GraphFacts facts = compute_facts(g);
	if (edge) {
		const auto check = verify_lemma(LemmaId::L2_5, g, a, facts, *edge, tol);
		for (auto& l : v.lemmas)
			if (l.lemma_id == LemmaId::L2_5)
				l = check;
	}

	std::optional<ClosedForm> closed;
	if (family && family->multipartite_parts()) {
		ClosedForm cf;
		cf.values = multipartite_closed_form_spectrum(*family->multipartite_parts()).values;
		for (int i = 0; i < a.n; ++i)
			cf.max_abs_delta = std::max(cf.max_abs_delta, std::abs(cf.values[i] - a.spectrum.values[i]));
		closed = cf;
	}
	const bool closed_ok = !closed || closed->max_abs_delta <= tol.eig;

	const auto& s = a.summary;
	if (fmt == Format::Json) {
		Json j;
		j["metadata"] = metadata_json(meta);
		j["input"] = input;
		if (family)
			j["family"] = family->describe();
		j["graph6"] = v.graph6;
		j["n"] = g.order();
		j["m"] = g.size();
		j["wiener"] = s.wiener;
		j["diameter"] = s.diameter;
		j["transmissions"] = s.tr;
		j["tr_max"] = s.tr_max;
		j["tr_min"] = s.tr_min;
		j["r1"] = s.r1;
		j["transmission_regular"] = s.transmission_regular();
		j["spectrum"] = a.spectrum.values;
		Json clusters = Json::array();
		for (const auto& c : cluster_multiplicities(a.spectrum, tol.cluster))
			clusters.push_back(Json{{"value", c.value}, {"multiplicity", c.multiplicity}});
		j["clusters"] = clusters;
		j["partial_1"] = a.partial_1;
		j["partial_n_minus_1"] = a.partial_n_minus_1;
		j["dls"] = a.dls;
		j["dls_integer"] = a.dls_integer ? Json(*a.dls_integer) : Json(nullptr);
		j["multiplicity_of_n"] = a.mult_of_n;
		j["alpha"] = facts.alpha;
		j["chi"] = facts.chi ? Json(*facts.chi) : Json(nullptr);
		j["structure"] = structure_json(facts.tag);
		if (closed) {
			j["closed_form"] = closed->values;
			j["max_abs_delta"] = closed->max_abs_delta;
		}
		j["verdict"] = verdict_json(v);
		out << j.dump(2) << '\n';
	} else if (fmt == Format::Csv) {
		write_csv_metadata(out, meta);
		write_csv_line(out, csv_header(meta));
		write_csv_line(out, csv_fields(v, meta));
	} else {
		if (family)
			out << "family       " << family->describe() << '\n';
		out << "graph6       " << v.graph6 << '\n'
			<< "edges        " << format_edge_list(g) << '\n'
			<< "n            " << g.order() << '\n'
			<< "m            " << g.size() << '\n'
			<< "wiener       " << s.wiener << '\n'
			<< "diameter     " << s.diameter << '\n'
			<< "transmission";
		for (auto t : s.tr)
			out << ' ' << t;
		out << "\ntr_max       " << s.tr_max << '\n'
			<< "tr_min       " << s.tr_min << '\n'
			<< "r1           " << s.r1 << '\n'
			<< "spectrum     " << spectrum_text(a, tol.cluster) << '\n'
			<< "partial_1    " << format_text(a.partial_1) << '\n'
			<< "partial_n-1  " << format_text(a.partial_n_minus_1) << '\n'
			<< "DLS          " << format_text(a.dls) << '\n'
			<< "alpha        " << facts.alpha << '\n'
			<< "chi          " << (facts.chi ? std::to_string(*facts.chi) : std::string("n/a")) << '\n'
			<< "structure    " << facts.tag.describe() << '\n';
		if (closed) {
			out << "closed form ";
			for (double x : closed->values)
				out << ' ' << format_text(x);
			out << "\nmax |delta|  " << format_double(closed->max_abs_delta) << (closed_ok ? "" : "  EXCEEDS TOLERANCE")
				<< '\n';
		}
		write_bounds_text(out, v);
	}
	report_violations(err, v, "input");
	if (!closed_ok)
		err << "closed form mismatch: max |delta| = " << format_double(closed->max_abs_delta) << '\n';
	return v.clean() && closed_ok ? kOk : kViolations;
}

enum class RowMode
{
	All,
	Violations,
	None,
};

/// Streams verdicts into the chosen format and tallies the summary.
class ReportWriter
{
public:
	ReportWriter(std::ostream& out, std::ostream& err, const RunMetadata& meta, Format fmt, RowMode rows)
		: out_(out)
		, err_(err)
		, meta_(meta)
		, fmt_(fmt)
		, rows_(rows)
	{
	}

	void begin()
	{
		if (fmt_ == Format::Json) {
			out_ << "{\"metadata\":" << metadata_json(meta_).dump() << ",\"rows\":[";
		} else if (fmt_ == Format::Csv) {
			write_csv_metadata(out_, meta_);
			write_csv_line(out_, csv_header(meta_));
		} else {
			out_ << "# " << meta_.command << ' ' << meta_.source << '\n';
		}
	}

	void row(const GraphVerdict& v, const std::string& where)
	{
		summary.add(v);
		const bool bad = !v.clean();
		if (bad)
			report_violations(err_, v, where);
		if (rows_ == RowMode::None || (rows_ == RowMode::Violations && !bad))
			return;
		if (fmt_ == Format::Json) {
			out_ << (first_ ? "\n" : ",\n") << verdict_json(v).dump();
			first_ = false;
		} else if (fmt_ == Format::Csv) {
			write_csv_line(out_, csv_fields(v, meta_));
		} else {
			out_ << text_row(v) << '\n';
		}
	}

	void end(const Json& extra = Json::object())
	{
		if (fmt_ == Format::Json) {
			Json s = summary_json(summary);
			for (auto it = extra.begin(); it != extra.end(); ++it)
				s[it.key()] = it.value();
			out_ << (first_ ? "" : "\n") << "],\"summary\":" << s.dump() << "}\n";
		} else if (fmt_ == Format::Csv) {
			write_summary_text(err_, summary);
		} else {
			write_summary_text(out_, summary);
		}
	}

	ScanSummary summary;

private:
	std::ostream& out_;
	std::ostream& err_;
	const RunMetadata& meta_;
	Format fmt_;
	RowMode rows_;
	bool first_ = true;
};

int default_threads()
{
	return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

struct ScanArgs
{
	std::string path;
	bool skip_bad = false;
	int threads = 0;
	RowMode rows = RowMode::All;
};

int cmd_scan(const ScanArgs& args, const CommonFlags& flags, std::istream& in, std::ostream& out, std::ostream& err)
{
	std::ifstream file;
	std::istream* src = &in;
	if (args.path != "-") {
		file.open(args.path);
		if (!file) {
			err << "error: cannot open " << args.path << '\n';
			return kInputError;
		}
		src = &file;
	}
	const RunMetadata meta = make_metadata("scan", args.path, flags);
	ReportWriter writer(out, err, meta, format_of(flags), args.rows);
	Graph6Reader reader(*src);
	std::deque<std::size_t> lines;

	auto source = [&]() -> std::optional<Graph> {
		while (auto rec = reader.next()) {
			const std::string where = "line " + std::to_string(rec->line_number);
			std::string problem;
			if (!rec->ok())
				problem = std::get<std::string>(rec->result);
			else if (std::get<Graph>(rec->result).order() < 2)
				problem = "graph has fewer than 2 vertices";
			if (!problem.empty()) {
				if (!args.skip_bad)
					throw InputError(where + ": " + problem);
				++writer.summary.bad_lines;
				err << "warning: " << where << ": " << problem << " (skipped)\n";
				continue;
			}
			Graph g = std::get<Graph>(std::move(rec->result));
			const int comps = connected_components(g).count;
			if (comps > 1) {
				++writer.summary.disconnected_skipped;
				err << "warning: " << where << ": disconnected graph (" << comps << " components) skipped\n";
				continue;
			}
			lines.push_back(rec->line_number);
			return g;
		}
		return std::nullopt;
	};

	writer.begin();
	run_ordered(
		source, [&](const Graph& g, std::uint64_t idx) { return verify_graph(g, meta.verify, idx); },
		[&](GraphVerdict&& v) {
			v.index = lines.front();
			lines.pop_front();
			writer.row(v, "line " + std::to_string(v.index));
		},
		args.threads > 0 ? args.threads : default_threads());
	writer.end();
	return writer.summary.clean() ? kOk : kViolations;
}

struct EnumerateArgs
{
	int n = 0;
	int threads = 0;
	RowMode rows = RowMode::Violations;
	bool progress = false;
};

int cmd_enumerate(const EnumerateArgs& args, const CommonFlags& flags, std::ostream& out, std::ostream& err)
{
	if (args.n > kEnumerationCap)
		throw VertexCapExceeded(args.n, kEnumerationCap);
	if (args.n < 3)
		throw InvalidParams("enumerate needs 3 <= n <= 7");

	const RunMetadata meta = make_metadata("enumerate", "n=" + std::to_string(args.n), flags);
	ReportWriter writer(out, err, meta, format_of(flags), args.rows);
	LabeledConnectedEnumerator en(args.n);
	std::deque<std::uint64_t> masks;
	std::uint64_t done = 0;

	writer.begin();
	run_ordered(
		[&]() -> std::optional<Graph> {
			auto g = en.next();
			if (g)
				masks.push_back(en.mask());
			return g;
		},
		[&](const Graph& g, std::uint64_t idx) { return verify_graph(g, meta.verify, idx); },
		[&](GraphVerdict&& v) {
			v.index = masks.front();
			masks.pop_front();
			writer.row(v, "mask " + std::to_string(v.index));
			if (args.progress && ++done % 100000 == 0)
				err << "progress: " << done << " graphs\n";
		},
		args.threads > 0 ? args.threads : default_threads());

	// The T4_8 reference value against the generated extremal graph, once per chi.
	Json turan = Json::array();
	bool turan_ok = true;
	for (int chi = (args.n + 1) / 2; chi <= args.n - 1; ++chi) {
		const auto a = analyze(generate(FamilySpec::turan_type(args.n, chi)), meta.verify.tol);
		const double expected = turan_reference_radius(args.n);
		const bool ok = std::abs(a.partial_1 - expected) <= meta.verify.tol.eig * expected;
		turan_ok = turan_ok && ok;
		turan.push_back(Json{{"chi", chi}, {"partial_1", a.partial_1}, {"expected", expected}, {"ok", ok}});
		if (!ok)
			err << "T4_8 reference mismatch: n=" << args.n << " chi=" << chi << " partial_1=" << format_double(a.partial_1)
				<< '\n';
	}
	writer.end(Json{{"turan_reference", turan}});
	if (format_of(flags) == Format::Text)
		out << "  T4_8 reference n+2    " << (turan_ok ? "ok" : "MISMATCH") << '\n';
	if (args.progress)
		err << "done: " << writer.summary.graphs_scanned << " graphs\n";
	return writer.summary.clean() && turan_ok ? kOk : kViolations;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
	CLI::App app{"Distance Laplacian spread bounds: analysis, corpus scans and exhaustive verification", "dlspread"};
	app.require_subcommand(1);

	const std::map<std::string, RowMode> row_modes{
		{"all", RowMode::All}, {"violations", RowMode::Violations}, {"none", RowMode::None}};

	CommonFlags analyze_flags;
	std::string analyze_input;
	int n_hint = 0;
	std::string edge_text;
	auto* analyze_cmd = app.add_subcommand("analyze", "analyze one graph given as graph6 or an edge list u-v,u-v");
	analyze_cmd->add_option("input", analyze_input, "graph6 line or edge list")->required();
	analyze_cmd->add_option("--order", n_hint, "vertex count for edge lists with isolated trailing vertices");
	analyze_cmd->add_option("--edge", edge_text, "edge u-v for the L2_5 deletion check");
	add_common(analyze_cmd, analyze_flags);

	CommonFlags scan_flags;
	ScanArgs scan_args;
	auto* scan_cmd = app.add_subcommand("scan", "check every graph of a graph6 file ('-' for stdin)");
	scan_cmd->add_option("path", scan_args.path, "graph6 file")->required();
	scan_cmd->add_flag("--skip-bad", scan_args.skip_bad, "skip malformed lines instead of failing");
	scan_cmd->add_option("--threads", scan_args.threads, "worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);
	scan_cmd->add_option("--rows", scan_args.rows, "rows to print: all, violations, none")
		->transform(CLI::CheckedTransformer(row_modes, CLI::ignore_case));
	add_common(scan_cmd, scan_flags);

	CommonFlags enum_flags;
	EnumerateArgs enum_args;
	auto* enum_cmd = app.add_subcommand("enumerate", "verify every labeled connected graph on n vertices");
	enum_cmd->add_option("-n,--n", enum_args.n, "vertex count, 3..7")->required();
	enum_cmd->add_option("--threads", enum_args.threads, "worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);
	enum_cmd->add_option("--rows", enum_args.rows, "rows to print: all, violations, none")
		->transform(CLI::CheckedTransformer(row_modes, CLI::ignore_case));
	enum_cmd->add_flag("--progress", enum_args.progress, "report progress on stderr");
	add_common(enum_cmd, enum_flags);

	CommonFlags family_flags;
	std::string family_kind;
	std::string family_params;
	auto* family_cmd = app.add_subcommand("family", "generate a named family and compare with the closed form");
	family_cmd->add_option("kind", family_kind, "Complete, Star, CompleteBipartite, CompleteMultipartite, "
												"KnMinusE, Path, Cycle, TuranType")
		->required();
	family_cmd->add_option("params", family_params, "comma-separated parameters, e.g. 3,3,3")->required();
	add_common(family_cmd, family_flags);

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? kOk : kInputError;
	}

	try {
		if (*analyze_cmd) {
			const auto meta = make_metadata("analyze", analyze_input, analyze_flags);
			const Graph g = parse_input(analyze_input, n_hint);
			std::optional<Edge> edge;
			if (!edge_text.empty())
				edge = parse_edge(edge_text);
			return single_graph(g, analyze_input, meta, format_of(analyze_flags), edge, std::nullopt, out, err);
		}
		if (*scan_cmd)
			return cmd_scan(scan_args, scan_flags, in, out, err);
		if (*enum_cmd)
			return cmd_enumerate(enum_args, enum_flags, out, err);
		if (*family_cmd) {
			const auto spec = parse_family(family_kind, family_params);
			const auto meta = make_metadata("family", spec.describe(), family_flags);
			return single_graph(generate(spec), family_kind + " " + family_params, meta, format_of(family_flags),
								std::nullopt, spec, out, err);
		}
	} catch (const InputError& e) {
		err << "error: " << e.what() << '\n';
		return kInputError;
	} catch (const InternalIdentityFailure& e) {
		err << "internal failure: " << e.what() << '\n';
		return kViolations;
	} catch (const IterationLimit& e) {
		err << "internal failure: " << e.what() << '\n';
		return kViolations;
	} catch (const Error& e) {
		err << "error: " << e.what() << '\n';
		return kInputError;
	}
	return kInputError;
}

} // namespace dls::cli
