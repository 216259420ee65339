// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is nonzero if any criterion fails; -v prints the checks.
#include <cstring>
#include <future>
#include <iostream>

#include "geproci/suite.hpp"

int main(int argc, char** argv) {
  bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
  std::vector<std::future<gp::CriterionResult>> jobs;
  for (const auto& c : gp::criteria())
    jobs.push_back(std::async(std::launch::async, gp::run_criterion, c.key, gp::u64{1}));
  int failed = 0;
  for (auto& j : jobs) {
    gp::CriterionResult r = j.get();
    failed += !r.pass();
    std::cout << (r.pass() ? "PASS" : "FAIL") << " " << r.id << " " << r.key << ": " << r.title << "\n";
    for (const auto& c : r.checks)
      if (verbose || !c.pass) std::cout << "    " << (c.pass ? "ok  " : "FAIL") << " " << c.name << ": " << c.detail << "\n";
  }
  std::cout << (13 - failed) << "/13 criteria pass\n";
  return failed ? 1 : 0;
}
