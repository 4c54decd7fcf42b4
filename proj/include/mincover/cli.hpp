#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mincover::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kOk = 0,        // minimal cover / witness found / property holds
  kNegative = 1,  // verdict is negative or an algorithm precondition failed
  kUsage = 2,     // parse or usage error
};

/// Runs one command line (without the program name). Input files named
/// "-" or omitted are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

}  // namespace mincover::cli
