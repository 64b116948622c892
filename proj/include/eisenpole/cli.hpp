#pragma once

#include <string>
#include <vector>

#include "eisenpole/rational.hpp"

namespace eisenpole {

// Resolved configuration of one CLI invocation; flags override the config
// file, which uses CLI11's ini key=value format.
struct RunConfig {
  std::string command;  // rootdata | poles | identities | constants | verify | appendix
  std::string group;
  std::vector<int> parabolics;  // 1-based as given; empty means all
  std::string format = "table";  // table | latex | json | dot (identities)
  int depth = 1;
  long precision = 60;
  int threads = 0;  // 0: EISENPOLE_THREADS or hardware
  std::string out_path;
  Rat range_lo = Rat(0);
  Rat range_hi = rat(1, 2);
  std::string convention = "pipeline";  // informational; pipelines pin their own
  std::string s0;                       // appendix point
};

// Exit status: 0 success, 1 inconclusive results (flagged), 2 config errors.
int run(const RunConfig& cfg, std::string* captured_output = nullptr);

int run_cli(int argc, char** argv);

}  // namespace eisenpole
