#pragma once

#include <string>
#include <vector>

#include "gtq/quiver.hpp"

namespace gtq {

struct CriterionResult {
  int number = 0;
  std::string title;
  std::vector<std::string> failures;  // empty on success

  bool pass() const { return failures.empty(); }
  // "PASS 3 <title>" or "FAIL 3 <title>: <first failure> (+k more)"
  std::string line() const;
};

// Runs the bundled acceptance checks against the example files in data_dir.
// UsageError if data_dir is missing or holds no example files.
std::vector<CriterionResult> run_acceptance(const std::string& data_dir);

// Random connected gluings of at most max_blocks blocks that pass validate; deterministic in seed.
std::vector<GluingSpec> random_gluings(unsigned seed, std::size_t count, std::size_t max_blocks);

}  // namespace gtq
