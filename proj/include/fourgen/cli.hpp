#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fourgen::cli {

// exit status: 0 = success / property holds, 1 = property fails (witnesses
// in the report), 2 = usage or scope error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fourgen::cli
