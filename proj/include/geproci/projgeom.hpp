#pragma once

#include <functional>
#include <random>
#include <vector>

#include "geproci/linalg.hpp"

namespace gp {

using Rng = std::mt19937_64;

// Independent stream for a given (seed, purpose) pair, so a module's samples never
// replay the stream that generated its input.
inline Rng make_rng(u64 seed, u64 salt) {
  std::seed_seq seq{static_cast<unsigned>(seed), static_cast<unsigned>(seed >> 32), static_cast<unsigned>(salt),
                    static_cast<unsigned>(salt >> 32)};
  return Rng(seq);
}

// Homogeneous coordinates, first nonzero entry scaled to 1.
struct ProjPoint {
  Vec c;

  int ambient_dim() const { return static_cast<int>(c.size()) - 1; }
  bool operator==(const ProjPoint&) const = default;
  auto operator<=>(const ProjPoint&) const = default;
};

struct ProjPointHash {
  size_t operator()(const ProjPoint& p) const {
    size_t h = 1469598103934665603ULL;
    for (u64 x : p.c) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

ProjPoint make_point(const Fp& f, Vec coords);

u64 random_elem(const Fp& f, Rng& rng);
ProjPoint random_point(const Fp& f, int n, Rng& rng);

struct Flat {
  int ambient_dim = 0;
  Matrix basis;  // canonical RREF
  int dim = -1;
  bool operator==(const Flat&) const = default;
};

struct FlatHash {
  size_t operator()(const Flat& fl) const {
    size_t h = static_cast<size_t>(fl.dim) * 31 + fl.basis.cols;
    for (u64 x : fl.basis.a) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

Matrix coords_matrix(const std::vector<ProjPoint>& pts);
int span_dim(const Fp& f, const std::vector<ProjPoint>& pts);
Flat span_flat(const Fp& f, const std::vector<ProjPoint>& pts);
bool flat_contains(const Fp& f, const Flat& fl, const ProjPoint& p);
// A random point of the flat (random combination of its basis rows).
ProjPoint random_point_on(const Fp& f, const Flat& fl, Rng& rng);

u64 cross_ratio(const Fp& f, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d);
ProjPoint harmonic_conjugate(const Fp& f, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);
ProjPoint segre(const Fp& f, const ProjPoint& x, const ProjPoint& y);

// Linear projection from p onto P^{n-1}: x -> x_i p_k - x_k p_i (i != k), k the
// last nonzero coordinate of p. Throws VertexInZ or CollisionDetected.
std::vector<ProjPoint> project_from(const Fp& f, const ProjPoint& p, const std::vector<ProjPoint>& z);
// Same map without the collision check.
ProjPoint project_point(const Fp& f, const ProjPoint& p, const ProjPoint& x);

}  // namespace gp
