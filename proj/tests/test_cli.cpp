#include "doctest.h"

#include "dls/cli.hpp"
#include "dls/families.hpp"
#include "dls/graph6.hpp"

#include "json.hpp"

#include <cstdlib>
#include <sstream>

using namespace dls;
using nlohmann::json;

namespace {

struct Result
{
	int code = 0;
	std::string out;
	std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "")
{
	std::istringstream in(input);
	std::ostringstream out;
	std::ostringstream err;
	Result r;
	r.code = cli::run(args, in, out, err);
	r.out = out.str();
	r.err = err.str();
	return r;
}

const json& bound(const json& row, const std::string& id)
{
	for (const auto& b : row["bounds"])
		if (b["theorem"] == id)
			return b;
	throw std::runtime_error("no bound " + id);
}

const json& lemma(const json& row, const std::string& id)
{
	for (const auto& l : row["lemmas"])
		if (l["lemma"] == id)
			return l;
	throw std::runtime_error("no lemma " + id);
}

std::string multipartite_corpus(int max_n)
{
	std::string text = ">>graph6<<\n";
	for (int n = 2; n <= max_n; ++n)
		for (const auto& parts : multipartite_partitions(n))
			text += write_graph6(generate(FamilySpec::complete_multipartite(parts))) + "\n";
	return text;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text)
{
	std::vector<std::vector<std::string>> rows;
	std::istringstream in(text);
	std::string line;
	while (std::getline(in, line)) {
		if (line.empty() || line[0] == '#')
			continue;
		std::vector<std::string> fields;
		std::stringstream ss(line);
		std::string f;
		while (std::getline(ss, f, ','))
			fields.push_back(f);
		if (!line.empty() && line.back() == ',')
			fields.emplace_back();
		rows.push_back(fields);
	}
	return rows;
}

} // namespace

TEST_CASE("analyze K4 from graph6")
{
	const auto r = run({"analyze", "C~"});
	CHECK(r.code == 0);
	CHECK(r.out.find("spectrum     4^3 0") != std::string::npos);
	CHECK(r.out.find("DLS          0") != std::string::npos);

	const auto j = json::parse(run({"analyze", "C~", "--json"}).out);
	CHECK(std::abs(j["dls"].get<double>()) < 1e-9);
	CHECK(j["clusters"][0]["multiplicity"] == 3);
	for (const char* id : {"T3_1_L", "C3_2", "T3_4_L", "C3_5", "T3_6", "C3_7", "L2_2"}) {
		INFO(id);
		CHECK(bound(j["verdict"], id)["equality"] == true);
		CHECK(bound(j["verdict"], id)["consistent"] == true);
	}
}

TEST_CASE("analyze C4 from an edge list")
{
	const auto r = run({"analyze", "0-1,1-2,2-3,3-0", "--json"});
	CHECK(r.code == 0);
	const auto j = json::parse(r.out);
	CHECK(j["dls"].get<double>() == doctest::Approx(2.0));
	CHECK(j["diameter"] == 2);
	CHECK(lemma(j["verdict"], "L4_3")["passed"] == true);
	CHECK(lemma(j["verdict"], "L4_3")["applicable"] == true);

	const auto e = json::parse(run({"analyze", "0-1,1-2,2-3,3-0", "--edge", "0-1", "--json"}).out);
	CHECK(lemma(e["verdict"], "L2_5")["passed"] == true);
	CHECK(run({"analyze", "0-1,1-2,2-3,3-0", "--edge", "0-2"}).code == 2);
}

TEST_CASE("analyze K2 marks degenerate theorems inapplicable")
{
	const auto j = json::parse(run({"analyze", "A_", "--json"}).out);
	CHECK(bound(j["verdict"], "T3_1_L")["applicable"] == false);
	CHECK(bound(j["verdict"], "T3_1_U")["applicable"] == false);
	CHECK(bound(j["verdict"], "L2_2")["holds"] == true);
}

TEST_CASE("analyze input errors")
{
	const auto r = run({"analyze", "B?"});
	CHECK(r.code == 2);
	CHECK(r.err.find("3 components") != std::string::npos);
	CHECK(run({"analyze", "C}x"}).code == 2);
	CHECK(run({"analyze", "0-0"}).code == 2);
	CHECK(run({"analyze", "@"}).code == 2);
	CHECK(run({"analyze", "C~", "--theorems", "T9"}).code == 2);
	CHECK(run({"analyze", "C~", "--eq-tol", "-1"}).code == 2);
	CHECK(run({"frobnicate"}).code == 2);
	CHECK(run({}).code == 2);
	CHECK(run({"--help"}).code == 0);
}

TEST_CASE("scan an empty file")
{
	const auto r = run({"scan", "-", "--json"}, "");
	CHECK(r.code == 0);
	const auto j = json::parse(r.out);
	CHECK(j["rows"].empty());
	CHECK(j["summary"]["graphs_scanned"] == 0);
}

TEST_CASE("scan every complete multipartite graph with n <= 10")
{
	const auto r = run({"scan", "-", "--json", "--threads", "2"}, multipartite_corpus(10));
	REQUIRE(r.code == 0);
	const auto j = json::parse(r.out);
	CHECK(j["summary"]["violations"] == 0);
	CHECK(j["summary"]["equality_mismatches"] == 0);
	int equalities = 0;
	int expected = 0;
	for (const auto& row : j["rows"]) {
		const auto tag = classify_structure(parse_graph6(row["graph6"].get<std::string>()));
		const int n = row["n"];
		const int k = static_cast<int>(tag.parts.size());
		const auto& t46 = bound(row, "T4_6");
		if (!t46["applicable"].get<bool>())
			continue;
		const bool family = tag.is_balanced_multipartite && n % k == 0;
		CHECK(t46["equality"] == family);
		equalities += t46["equality"].get<bool>();
		expected += family;
	}
	CHECK(equalities == expected);
	CHECK(equalities > 0);
}

TEST_CASE("scan K_{5,4} reports C4_7 strictly")
{
	const std::string line = write_graph6(generate(FamilySpec::complete_bipartite(5, 4)));
	const auto j = json::parse(run({"scan", "-", "--json"}, line + "\n").out);
	const auto& c = bound(j["rows"][0], "C4_7");
	CHECK(c["applicable"] == true);
	CHECK(c["direction"] == "strict-lower");
	CHECK(c["lhs"] == 4.0);
	CHECK(c["rhs"].get<double>() == doctest::Approx(5.0));
	CHECK(c["holds"] == true);
}

TEST_CASE("scan malformed and disconnected lines")
{
	const std::string corpus = "C~\nC}x\nB?\nA_\n";
	const auto strict = run({"scan", "-"}, corpus);
	CHECK(strict.code == 2);
	CHECK(strict.err.find("line 2") != std::string::npos);

	const auto lenient = run({"scan", "-", "--skip-bad", "--json"}, corpus);
	CHECK(lenient.code == 0);
	const auto j = json::parse(lenient.out);
	CHECK(j["summary"]["bad_lines"] == 1);
	CHECK(j["summary"]["disconnected_skipped"] == 1);
	CHECK(j["summary"]["graphs_scanned"] == 2);
	CHECK(j["rows"][0]["index"] == 1);
	CHECK(j["rows"][1]["index"] == 4);
	CHECK(lenient.err.find("line 3: disconnected") != std::string::npos);

	CHECK(run({"scan", "/nonexistent/file.g6"}).code == 2);
}

TEST_CASE("enumerate small orders")
{
	SUBCASE("n = 4")
	{
		const auto r = run({"enumerate", "--n", "4", "--json", "--rows", "all"});
		CHECK(r.code == 0);
		const auto j = json::parse(r.out);
		CHECK(j["summary"]["graphs_scanned"] == 38);
		CHECK(j["summary"]["violations"] == 0);
		CHECK(j["summary"]["per_theorem"]["T3_1_L"]["equalities"] == 1);
		for (const auto& row : j["rows"])
			if (bound(row, "T3_1_L")["equality"].get<bool>())
				CHECK(row["graph6"] == "C~");
		CHECK(j["summary"]["turan_reference"].size() == 2);
	}
	SUBCASE("n = 5")
	{
		const auto j = json::parse(run({"enumerate", "--n", "5", "--json"}).out);
		CHECK(j["summary"]["graphs_scanned"] == 728);
		CHECK(j["summary"]["clean"] == true);
		CHECK(j["rows"].empty());
	}
	SUBCASE("n = 3")
	{
		const auto j = json::parse(run({"enumerate", "--n", "3", "--json"}).out);
		CHECK(j["summary"]["graphs_scanned"] == 4);
		CHECK(j["summary"]["per_theorem"]["T4_9"]["applicable"] == 0);
	}
	SUBCASE("bounds on n")
	{
		CHECK(run({"enumerate", "--n", "8"}).code == 2);
		CHECK(run({"enumerate", "--n", "2"}).code == 2);
	}
}

TEST_CASE("family reports")
{
	SUBCASE("K_{3,3,3}")
	{
		const auto r = run({"family", "CompleteMultipartite", "3,3,3", "--json"});
		CHECK(r.code == 0);
		const auto j = json::parse(r.out);
		CHECK(j["max_abs_delta"].get<double>() <= 1e-8);
		CHECK(j["dls"].get<double>() == doctest::Approx(3.0));
		CHECK(bound(j["verdict"], "T4_6")["equality"] == true);
		CHECK(j["closed_form"] == json::array({12, 12, 12, 12, 12, 12, 9, 9, 0}));
	}
	SUBCASE("Star 6")
	{
		const auto j = json::parse(run({"family", "Star", "6", "--json"}).out);
		CHECK(j["dls"].get<double>() == doctest::Approx(5.0));
	}
	SUBCASE("TuranType 6,5")
	{
		const auto j = json::parse(run({"family", "TuranType", "6,5", "--json"}).out);
		CHECK(j["structure"]["parts"] == json::array({2, 1, 1, 1, 1}));
		CHECK(j["dls"].get<double>() == doctest::Approx(2.0));
		CHECK(bound(j["verdict"], "T4_9")["equality"] == true);
	}
	SUBCASE("text and errors")
	{
		const auto r = run({"family", "Path", "5"});
		CHECK(r.code == 0);
		CHECK(r.out.find("closed form") == std::string::npos);
		CHECK(run({"family", "TuranType", "6,2"}).code == 2);
		CHECK(run({"family", "Complete", "1"}).code == 2);
	}
}

TEST_CASE("JSON and CSV carry identical numbers")
{
	std::string corpus;
	LabeledConnectedEnumerator en(5);
	while (auto g = en.next())
		corpus += write_graph6(*g) + "\n";

	const auto j = json::parse(run({"scan", "-", "--json", "--t4-6-all-k"}, corpus).out);
	const auto csv = csv_rows(run({"scan", "-", "--csv", "--t4-6-all-k"}, corpus).out);
	REQUIRE(csv.size() == j["rows"].size() + 1);
	const auto& header = csv[0];
	auto col = [&](const std::string& name) {
		const auto it = std::find(header.begin(), header.end(), name);
		REQUIRE(it != header.end());
		return static_cast<std::size_t>(it - header.begin());
	};
	for (std::size_t r = 0; r < j["rows"].size(); ++r) {
		const auto& row = j["rows"][r];
		const auto& fields = csv[r + 1];
		REQUIRE(fields.size() == header.size());
		REQUIRE(fields[col("graph6")] == row["graph6"]);
		for (const char* key : {"partial_1", "partial_n_minus_1", "dls"})
			REQUIRE(std::strtod(fields[col(key)].c_str(), nullptr) == row[key].get<double>());
		REQUIRE(std::stoll(fields[col("wiener")]) == row["wiener"].get<long long>());
		for (const auto& b : row["bounds"]) {
			const std::string id = b["theorem"];
			REQUIRE(fields[col(id + "_applicable")] == (b["applicable"].get<bool>() ? "1" : "0"));
			if (!b["applicable"].get<bool>()) {
				REQUIRE(fields[col(id + "_lhs")].empty());
				continue;
			}
			for (const char* key : {"lhs", "rhs", "slack"})
				REQUIRE(std::strtod(fields[col(id + "_" + key)].c_str(), nullptr) == b[key].get<double>());
			REQUIRE(fields[col(id + "_equality")] == (b["equality"].get<bool>() ? "1" : "0"));
		}
		REQUIRE(std::strtod(fields[col("interlacing_worst_slack")].c_str(), nullptr)
				== row["interlacing"]["worst_slack"].get<double>());
	}
}

TEST_CASE("reports are byte-identical across runs and thread counts")
{
	const std::string corpus = multipartite_corpus(8);
	for (const char* fmt : {"--json", "--csv"}) {
		const auto a = run({"scan", "-", fmt, "--threads", "1"}, corpus);
		const auto b = run({"scan", "-", fmt, "--threads", "1"}, corpus);
		const auto c = run({"scan", "-", fmt, "--threads", "3"}, corpus);
		CHECK(a.out == b.out);
		CHECK(a.out == c.out);
	}
	CHECK(run({"analyze", "C~"}).out == run({"analyze", "C~"}).out);
	CHECK(run({"enumerate", "--n", "4", "--rows", "all", "--threads", "1"}).out
		  == run({"enumerate", "--n", "4", "--rows", "all", "--threads", "4"}).out);
}

TEST_CASE("theorem selection narrows the report")
{
	const auto j = json::parse(run({"analyze", "C~", "--json", "--theorems", "T4_2,L2_2", "--lemmas", "none"}).out);
	CHECK(j["verdict"]["bounds"].size() == 2);
	CHECK(j["verdict"]["lemmas"].empty());
	CHECK(j["metadata"]["theorems"] == json::array({"T4_2", "L2_2"}));
}
