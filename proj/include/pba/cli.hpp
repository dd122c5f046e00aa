#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pba {

/// Command-line driver: parses the arguments and dispatches. Streams are
/// injected so the behavior is testable without a process boundary.
/// Exit codes: 0 success, 1 verification failure, 2 usage errors.
int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace pba
