#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geproci/projgeom.hpp"

namespace gp {

using ExprPoint = std::vector<std::string>;

enum class StdWhich { Y1, Y2, Y1Y2 };

struct ConfigTags {
  std::optional<std::pair<int, int>> ab;  // expected geproci type, a <= b
  std::optional<int> std_n;               // set by std_construction
  std::optional<StdWhich> std_which;
  bool operator==(const ConfigTags&) const = default;
};

// Points are kept both as source expressions and as residues over field.prime.
struct Configuration {
  std::string label;
  int ambient_dim = 0;
  FieldSpec field;
  std::vector<ExprPoint> exprs;
  std::vector<ProjPoint> points;
  ConfigTags tags;

  Fp fp() const { return field.field(); }
  size_t size() const { return points.size(); }
  bool operator==(const Configuration&) const = default;
};

// Evaluates the expressions over the given prime (0: smallest admissible prime >= 2^30).
Configuration realize(std::string label, int ambient_dim, std::vector<Symbol> symbols,
                      std::vector<ExprPoint> exprs, ConfigTags tags = {}, u64 prime = 0);
// Re-evaluates a configuration over another prime.
Configuration with_prime(const Configuration& z, u64 prime);
// Configuration given directly by residues (random sets, projections).
Configuration from_points(std::string label, const FieldSpec& fs, const std::vector<ProjPoint>& pts);
Configuration subset(const Configuration& z, const std::vector<size_t>& idx, std::string label);
Configuration union_of(const Configuration& a, const Configuration& b, std::string label);

struct P1Param {
  std::string a, b;
};

Configuration grid(int a, int b, const std::vector<P1Param>& pa, const std::vector<P1Param>& pb,
                   std::vector<Symbol> symbols = {}, u64 prime = 0);
// (a,b)-grid on roots of unity of order max(a,b) (a <= b).
Configuration roots_grid(int a, int b, u64 prime = 0);
Configuration std_construction(int n, StdWhich which, u64 prime = 0);
Configuration extend_standard(const Configuration& z);
Configuration remove_lines(const Configuration& z, const std::vector<Flat>& lines);

Configuration named(const std::string& label, u64 prime = 0);
std::vector<std::string> named_labels();

struct FlatUnion {
  int ambient_dim = 0;
  std::vector<Flat> flats;
};

// Coordinate flats of the simplex: codim = n-1 gives lines, codim = 2 gives
// the codimension-2 skeleton.
FlatUnion skeleton(const Fp& f, int n, int codim);

std::string to_json(const Configuration& z);
Configuration from_json(const std::string& text, u64 prime = 0);
void save(const Configuration& z, const std::string& path);
Configuration load(const std::string& path, u64 prime = 0);

}  // namespace gp
