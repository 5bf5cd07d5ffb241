#pragma once

#include "dls/verify.hpp"

#include "json.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace dls::cli {

using Json = nlohmann::ordered_json;

enum class Format
{
	Text,
	Json,
	Csv,
};

/// Settings echoed into every report so a run can be reproduced.
struct RunMetadata
{
	std::string command;
	std::string source;
	VerifyOptions verify;
};

/// Shortest decimal string that parses back to the same double.
std::string format_double(double x);
/// Rounded form for human-readable output.
std::string format_text(double x);

Json metadata_json(const RunMetadata& meta);
Json bound_json(const BoundCheck& c);
Json lemma_json(const LemmaCheck& l);
Json interlacing_json(const InterlacingAudit& audit);
Json verdict_json(const GraphVerdict& v);
Json summary_json(const ScanSummary& s);

std::vector<std::string> csv_header(const RunMetadata& meta);
std::vector<std::string> csv_fields(const GraphVerdict& v, const RunMetadata& meta);
void write_csv_line(std::ostream& out, const std::vector<std::string>& fields);
void write_csv_metadata(std::ostream& out, const RunMetadata& meta);

/// One compact line per graph for text reports.
std::string text_row(const GraphVerdict& v);
void write_bounds_text(std::ostream& out, const GraphVerdict& v);
void write_summary_text(std::ostream& out, const ScanSummary& s);

/// Prints every violated check of v, one line each. Returns the number of lines.
int report_violations(std::ostream& err, const GraphVerdict& v, const std::string& where);

} // namespace dls::cli
