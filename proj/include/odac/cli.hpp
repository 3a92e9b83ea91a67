#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace odac {

/// Full command-line front end. Exit codes: 0 success/valid, 1 verification
/// or necessary-condition failure, 2 usage or parse error. All regular output
/// goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace odac
