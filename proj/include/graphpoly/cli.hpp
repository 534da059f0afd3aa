#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphpoly::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;      // not isomorphic, irreducible, ...
inline constexpr int kInconclusive = 2;  // search budget or size guard hit
inline constexpr int kInputError = 3;

// Runs one command line (args excludes the program name). Results go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace graphpoly::cli
