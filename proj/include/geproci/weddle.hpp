#pragma once

#include <string>
#include <vector>

#include "geproci/configs.hpp"
#include "geproci/polyideal.hpp"

namespace gp {

struct WeddleContext {
  Configuration z;
  int d = 2;
  int rho = 0;          // generic rank of Lambda(Z + dQ, d)
  bool stable = false;  // all sampled Q agreed on rho
  int alpha = 0;        // rank of Lambda(Z, d)
  Echelon base;         // RREF of Lambda(Z, d)
  std::vector<size_t> free_cols;
};

// Samples the generic rank at `samples` random vertices.
WeddleContext weddle_context(const Configuration& z, int d, u64 seed = 1, int samples = 3);

// Lambda(Z + dP, d): the simple rows of Z stacked over the order d-1 derivative rows at P.
Matrix weddle_matrix(const Fp& f, const std::vector<ProjPoint>& z, int d, const ProjPoint& p);
// The P-dependent block after eliminating against the RREF of Lambda(Z, d).
Matrix reduced_block(const WeddleContext& ctx, const ProjPoint& p);
int weddle_rank(const WeddleContext& ctx, const ProjPoint& p);

bool weddle_member(const WeddleContext& ctx, const ProjPoint& p);

struct WeddleDegree {
  bool identically_zero = false;
  int degree = 0;
  size_t rows = 0, cols = 0;
};
// Throws NotSquare (message carries the block shape) when the reduced block is not square.
WeddleDegree weddle_degree(const WeddleContext& ctx, u64 seed = 1, int lines = 3);

struct ReducibleWeddleReport {
  u64 a = 0, b = 0, c = 0;
  int samples = 0;
  int agreements = 0;
  bool det_matches = false;
  bool vanishes_on_x0 = false;
  std::vector<ProjPoint> h;        // fourth plane meets L_i here
  bool h_expected = false;         // h_i = [2a:0:0:1] etc.
  bool harmonic = false;           // cross ratio (P_i, Q_i, O, H_i) = -1
  bool ok() const { return det_matches && vanishes_on_x0 && h_expected && harmonic; }
};
// Parameters of zero mean random nonzero a, b, c.
ReducibleWeddleReport verify_reducible_weddle(u64 a = 0, u64 b = 0, u64 c = 0, int samples = 200, u64 seed = 1,
                                              u64 prime = 0);

// The printed 10x10 matrix, columns x^2,y^2,z^2,w^2,xy,xz,xw,yz,yw,zw.
Matrix reducible_weddle_matrix(const Fp& f, u64 a, u64 b, u64 c, const Vec& q);

}  // namespace gp
