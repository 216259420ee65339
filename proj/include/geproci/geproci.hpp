#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geproci/combinat.hpp"
#include "geproci/polyideal.hpp"

namespace gp {

enum class Verdict { Yes, No, Inconclusive, Degenerate };
std::string verdict_name(Verdict v);

struct TrialWitness {
  Vec vertex;
  std::vector<int> dims;  // kernel dimensions / Hilbert values checked in this trial
  std::string status;     // "certified", or the obstruction found
};

struct Decision {
  Verdict verdict = Verdict::Inconclusive;
  int trials = 0;
  u64 prime = 0;
  u64 seed = 0;
  std::vector<TrialWitness> witness;
  std::string reason;
  // Extra counters (probe tallies and similar).
  std::vector<std::pair<std::string, long>> data;
};

// Serialized payload; contains no timing, so equal inputs give equal bytes.
std::string decision_json(const Decision& d);

Decision is_geproci(const Configuration& z, int a, int b, int trials = 3, u64 seed = 1);

struct GridResult {
  enum class Kind { Grid, HalfGrid, Neither } kind = Kind::Neither;
  int a = 0, b = 0;
  std::vector<std::vector<size_t>> family_a;  // a lines with b points each
  std::vector<std::vector<size_t>> family_b;  // b lines with a points each
};
std::string grid_kind_name(GridResult::Kind k);

GridResult detect_grid(const Configuration& z, int a, int b);
// Uses the configuration's (a,b) tag when present, otherwise tries every
// factorization |Z| = ab with 3 <= a <= b and reports the first grid found.
GridResult detect_grid(const Configuration& z);

Decision is_ci222_p4(const Configuration& z, int trials = 3, u64 seed = 1);

// True iff every point has a separator in exactly the same degrees.
bool cbp_points(const Fp& f, const std::vector<ProjPoint>& pts);
bool cbp_ambient(const Configuration& z);
Decision geprocb(const Configuration& z, int trials = 3, u64 seed = 1);

Decision remembers(const Configuration& w, const Configuration& z, int m, int trials = 3, u64 seed = 1,
                   int probes = 50);

}  // namespace gp
