#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dimkac {

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

struct RunConfig {
  std::string command;
  int N = 0;
  int level = -1;
  std::string tuple;
  std::string r, s;
  std::string backend;
  int trials = 20;
  std::uint64_t seed = 1;
  int depth = 0;
  bool symbolic = false;
  bool reproducible = false;
  bool paper_params = false;
  std::string out;
  std::string format = "json";
};

/// Runs one command line (without the program name). Reports go to `out` or
/// to the --out file, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dimkac
