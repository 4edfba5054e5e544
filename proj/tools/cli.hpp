#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace moduli::cli {

enum ExitCode : int {
  kOk = 0,
  kForbidden = 1,  // also: corpus verification failure
  kParseError = 2,
  kDegenerate = 3,
  kUnknown = 4,
  kIoError = 5,
};

inline constexpr int kMaxAtlasDegree = 8;
inline constexpr long kDefaultBudget = 100000;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moduli::cli
