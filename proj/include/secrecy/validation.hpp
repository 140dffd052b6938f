#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace secrecy {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::vector<std::string> details;  // one "ok"/"FAIL" line per check, measured vs expected
};

struct ValidationOptions {
  // Quick mode divides trial counts by 10 and doubles every stochastic
  // relative tolerance; deterministic identity checks are unchanged.
  bool quick = false;
  std::vector<int> only;  // criterion ids to run; empty = all
  std::uint64_t seed = 1;
  int threads = 0;
  bool verbose = true;  // stream detail lines as criteria run
};

// Runs the acceptance checklist and returns one result per criterion.
std::vector<CriterionResult> run_acceptance_suite(const ValidationOptions& options,
                                                  std::ostream& log);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace secrecy
