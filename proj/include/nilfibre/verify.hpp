#ifndef NILFIBRE_VERIFY_HPP
#define NILFIBRE_VERIFY_HPP

#include <string>
#include <vector>

#include "nilfibre/census.hpp"

namespace nilfibre {

struct VerifyOptions {
  OrbitOptions orbit;
  int codim_max_n = 7;  // rank oracle on component records
  int krull_max_n = 6;  // rank oracle on every reachable stage
  int moves_max_n = 8;  // rank oracle on every legal subcolumn move
  long limit = 1000000;
  bool parallel = true;
};

struct Check {
  std::string name;
  Report report;
  bool skipped = false;
};

struct VerificationSummary {
  Composition composition;
  std::vector<Check> checks;
  std::vector<std::string> findings;
  long states = 0;
  long final_states = 0;

  bool ok() const;
  const Check& check(const std::string& name) const;
};

// Names of the checks, in report order.
const std::vector<std::string>& check_names();

VerificationSummary verify_composition(const Composition& comp, const VerifyOptions& opt = {});

}  // namespace nilfibre

#endif  // NILFIBRE_VERIFY_HPP
