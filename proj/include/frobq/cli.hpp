#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frobq::cli {

/// Runs one frobq invocation. args is argv without the program name; results
/// go to out, diagnostics to err. Returns the process exit code: 0 when the
/// computation succeeded (whatever the verdict), 1 when a verify run found a
/// mismatch, cone violation, or representable witness, 2 on usage, parse, or
/// precondition errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobq::cli
