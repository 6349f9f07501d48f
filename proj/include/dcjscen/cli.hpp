#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcjscen::cli {

// Exit codes: 0 success, 1 domain error (genomes not co-tailed, invalid
// parking function or scenario, guard exceeded), 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name. Reads stdin from `in` when an input file
// is omitted or given as "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace dcjscen::cli
