#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tgw {

// Runs one tgw invocation. args excludes the program name. Returns the exit
// code: 0 all checks passed, 1 a verified-false finding, 2 input or
// configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Column-aligned text table with a dashed rule under the header.
std::string render_table(const std::vector<std::string>& headers,
                         const std::vector<std::vector<std::string>>& rows);

}  // namespace tgw
