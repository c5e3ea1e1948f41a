#pragma once

#include <istream>
#include <ostream>

namespace coquat::cli {

/// Entry point behind the `coquat` executable.
///
/// Exit codes: 0 success, 1 evaluation/parse error (or failed selftest/bench
/// cross-check), 2 usage error. `prompt` enables the REPL prompt.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err,
        bool prompt = false);

}  // namespace coquat::cli
