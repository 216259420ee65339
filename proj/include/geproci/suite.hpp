#pragma once

#include <string>
#include <vector>

#include "geproci/exactfield.hpp"

namespace gp {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // deterministic: no timings
};

struct CriterionResult {
  int id = 0;
  std::string key;
  std::string title;
  std::vector<Check> checks;
  bool pass() const;
};

struct CriterionInfo {
  int id;
  std::string key;
  std::string title;
};
const std::vector<CriterionInfo>& criteria();

// key is a criterion key ("geproci", "weddle", ...); throws UnknownCriterion.
CriterionResult run_criterion(const std::string& key, u64 seed = 1);
// Byte-stable JSON of a result.
std::string criterion_json(const CriterionResult& r);

}  // namespace gp
