#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dihom::cli {

/// Runs the command line. JSON results go to `out`; failures print
/// {"error": kind, "detail": message} to `err` and return nonzero.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dihom::cli
