#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "geproci/configs.hpp"

namespace gp {

struct OrthoGraph {
  size_t n = 0;                                  // number of vectors
  std::vector<std::pair<size_t, size_t>> edges;  // i < j
  std::vector<std::vector<bool>> adj;
  std::vector<std::vector<size_t>> bases;        // sorted index lists
  std::pair<u64, u64> primes;
};

// Edges are zero dot products under the configuration's prime and under `second_prime`
// (0: the next admissible prime above the first).
OrthoGraph ortho_graph(const Configuration& x, u64 second_prime = 0);

// A {0,1} assignment that is exclusive on edges and picks exactly one vector per basis.
std::optional<std::vector<int>> truth_assignment(const OrthoGraph& g);
bool is_ks_set(const Configuration& x);

}  // namespace gp
