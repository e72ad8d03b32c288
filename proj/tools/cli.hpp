#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loadcomp::cli
{

/// Exit statuses: 0 success, 1 input or validation error, 2 I/O error.
enum ExitCode : int
{
  ok = 0,
  input_error = 1,
  io_error = 2,
};

/// Runs the command line `args` (args[0] is the program name). Payloads go
/// to `out` unless --out is given; diagnostics and summaries go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace loadcomp::cli
