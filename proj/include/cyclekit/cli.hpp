#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclekit {

// Dispatches one batch invocation. Returns 0 on success, 1 when the verify
// suite finds a mismatch, 2 on usage errors. All report output goes to
// `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cyclekit
