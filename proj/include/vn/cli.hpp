#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace vn {

// Full command-line driver, callable in-process. Returns the exit code:
// 0 success, 1 a verified property failed, 2 bad input or usage.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace vn
