#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pdc::cli {

// Runs one command-line invocation against the given streams and returns the
// process exit code: 0 success (or positive verdict), 1 negative verdict,
// 2 validation or parse failure, 3 witness requested for a contractible
// complex.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pdc::cli
