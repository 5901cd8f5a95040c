#pragma once

#include <ostream>

namespace sturmian::cli {

/// Runs one command line. Returns the process exit code: 0 ok, 1 domain
/// error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sturmian::cli
