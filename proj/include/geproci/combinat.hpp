#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geproci/configs.hpp"

namespace gp {

// A maximal collinear (or coplanar) subset: the flat and the indices on it.
struct FlatSet {
  Flat flat;
  std::vector<size_t> pts;
};

struct IncidenceCensus {
  int flat_dim = 1;
  std::map<int, int> histogram;  // points on the flat -> number of flats
  int total() const;
};

std::vector<FlatSet> maximal_lines(const Fp& f, const std::vector<ProjPoint>& pts);
std::vector<FlatSet> maximal_planes(const Fp& f, const std::vector<ProjPoint>& pts);
IncidenceCensus line_census(const Configuration& z);
IncidenceCensus plane_census(const Configuration& z);
IncidenceCensus census_of(const std::vector<FlatSet>& flats, int flat_dim);

// For each point, the number of lines through it with exactly k points, k = 2..max.
std::vector<std::vector<int>> point_profiles(const std::vector<FlatSet>& lines, size_t npoints);

// The two collinear triples of concurrency points of the 2-point lines of a (3,3)-grid.
std::pair<std::vector<ProjPoint>, std::vector<ProjPoint>> brianchon_points(const Configuration& grid33);

struct EquivResult {
  enum class Kind { Distinguished, Equivalent, Unknown } kind = Kind::Unknown;
  std::string invariant;          // failing invariant when Distinguished
  std::vector<size_t> bijection;  // image of each point when Equivalent
};

// Named bipartite probes between two point classes (by line profile), joined by 2-point lines.
struct BipartiteProbe {
  std::vector<int> u_degrees;  // sorted
  long k33 = 0;                // copies of K_{3,3}
  long disjoint_k13 = 0;       // pairs (u1,u2) with disjoint 3-neighbourhoods on one longest line
  bool operator==(const BipartiteProbe&) const = default;
};
std::map<std::pair<std::vector<int>, std::vector<int>>, BipartiteProbe> bipartite_probes(const Configuration& z);

EquivResult weak_comb_equivalent(const Configuration& z1, const Configuration& z2, size_t exhaustive_bound = 16);

}  // namespace gp
