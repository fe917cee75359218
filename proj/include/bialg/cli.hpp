#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bialg::cli {

enum Exit : int { kPass = 0, kFail = 1, kUsage = 2 };

// args[0] is the program name. The report goes to `out`, usage text and
// errors to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

}  // namespace bialg::cli
