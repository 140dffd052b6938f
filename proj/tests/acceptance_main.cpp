// Acceptance checklist runner: one pass/fail line per criterion, nonzero exit
// when any criterion fails. `--quick` trades trials for speed, `--only 1,2`
// restricts the run.

#include <cstring>
#include <iostream>
#include <sstream>
#include <string>

#include "secrecy/validation.hpp"

int main(int argc, char** argv) {
  secrecy::ValidationOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      options.quick = true;
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      std::string token;
      while (std::getline(ss, token, ',')) options.only.push_back(std::stoi(token));
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      options.seed = std::stoull(argv[++i]);
    } else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) {
      options.threads = std::stoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance_tests [--quick] [--only ids] [--seed s] [--threads n]\n";
      return 2;
    }
  }
  const auto results = secrecy::run_acceptance_suite(options, std::cout);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return secrecy::all_passed(results) ? 0 : 1;
}
