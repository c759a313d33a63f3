#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace srn {

// Exit codes: 0 success / arrows, 1 negative verdict, 2 undecided or partial,
// 64 usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace srn
