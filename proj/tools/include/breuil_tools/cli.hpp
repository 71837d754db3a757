#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace breuil::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // validation failure or no match
inline constexpr int kExitParse = 2;   // unreadable input or bad arguments

// args excludes the program name. Writes one JSON document to out on success
// or failure, diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace breuil::cli
