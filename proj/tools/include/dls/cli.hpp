#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dls::cli {

enum ExitCode : int
{
	kOk = 0,
	kViolations = 1,
	kInputError = 2,
};

/// Runs the dlspread command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace dls::cli
