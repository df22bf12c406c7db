#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permsplit/splits.hpp"

namespace permsplit::cli {

struct RunResult {
  int exit_code = 0;  // 0 success, 1 domain error, 2 usage error
  std::string out;
  std::string err;
};

/// Runs one invocation; args excludes the program name.
RunResult run(const std::vector<std::string>& args);

/// "x1+x2=4", "x3=2" or "x_{1,3}=7". Throws ParseError (with the offending
/// position) on bad syntax, indices outside [n], repeated indices, or a level
/// outside the range of x_S.
SplitHyperplane parse_hyperplane(std::string_view text, int n);

/// "1246", "1,2,4,6", "" or "{}". Throws ParseError.
Subset parse_subset(std::string_view text);

}  // namespace permsplit::cli
