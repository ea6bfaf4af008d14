#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grauert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

/// Runs one command; args excludes the program name. Reports go to out (or --out), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grauert::cli
