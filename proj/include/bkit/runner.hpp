#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bkit/theorems.hpp"

namespace bkit {

// One invocation of the tool. run() never throws: configuration problems
// come back as exit code 2 with a machine-readable error object.
struct RunConfig {
  std::string command = "verify";  // verify|leibniz|berezin|moments|decouple|report-schema
  std::string algebra = "all";     // hw | sl2 | schrodinger | all
  std::optional<std::string> algebra_file;
  Params params;
  bool params_grid = false;
  int cap = 8;
  int order = 10;  // moment order for the gaussian suite / moments command
  std::vector<std::string> suites{"all"};
  std::string format = "text";  // text | json
  unsigned long long seed = 0;
  std::string op;  // operator name for berezin / moments
};

struct RunResult {
  int exit_code = 0;  // 0 all pass, 1 failures, 2 configuration error
  std::string output;
};

// Execute the configured command. Output is deterministic: the same config
// (seed included) produces byte-identical output.
RunResult run(const RunConfig&);

// The canonical suite execution order.
const std::vector<std::string>& suite_order();

// Description of the report document format.
Json report_schema();

}  // namespace bkit
