#pragma once

// The `qdual` command-line surface. Reports go to `out` as lines of the form
//   CHECK <suite>/<name> PASS|FAIL|VACUOUS <detail>
// diagnostics go to `err`. Exit codes: 0 no FAIL lines, 1 failures,
// 2 usage or parse errors.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qdual/classes.hpp"

namespace qdual {

struct SuiteConfig {
  std::string suite = "all";
  /// "all" (r1..r6), "corpus:<id>", or a ring file path.
  std::string ring = "all";
  Index bound = kDefaultBound;
  Index samples = 30;
  Index max_free_rank = 2;
  Index max_dim = 6;
  std::uint64_t seed = 7;
  /// Required number of non-vacuous two-of-three instances per ring.
  Index min_nonvacuous = 0;
};

const std::vector<std::string>& suite_names();

/// Runs the property suites; returns the exit code.
int run_verify(const SuiteConfig& config, std::ostream& out, std::ostream& err);

/// Report lines for one CheckReport.
std::vector<std::string> report_lines(const CheckReport& report, const std::string& prefix,
                                      const std::string& tag = "CHECK");

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdual
