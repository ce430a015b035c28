#ifndef PARSCHED_CLI_HPP
#define PARSCHED_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace parsched {

// Runs one CLI invocation (args exclude the program name). Returns the
// process exit code: 0 success, 1 diagnostic (bad input, validation
// findings), 2 invariant violation (bug signal). Writing through streams
// keeps invocations embeddable and byte-for-byte reproducible in tests.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace parsched

#endif
