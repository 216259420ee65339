#pragma once

#include <utility>

#include "geproci/configs.hpp"
#include "geproci/polyideal.hpp"

namespace gp {

struct UnexpReport {
  int t = 0, m = 0;
  long adim = 0, vdim = 0;
  bool unexpected = false;
};

// dim [I(Z + mP)]_t at a general P, minimized over trials. For t == m the
// count is taken on the projection of Z from P.
long adim(const Configuration& z, int t, int m, int trials = 3, u64 seed = 1);
long adim(const Fp& f, const FlatUnion& z, int t, int m, int trials = 3, u64 seed = 1);
// Same quantity from derivative rows, regardless of t == m.
long adim_direct(const Configuration& z, int t, int m, int trials = 3, u64 seed = 1);

long vdim(const Configuration& z, int t, int m);
long vdim(const Fp& f, const FlatUnion& z, int t, int m, u64 seed = 1);
// dim [I(Z)]_t for a union of flats, through sampled points.
long flat_union_ideal_dim(const Fp& f, const FlatUnion& z, int t, u64 seed = 1);

UnexpReport c_predicate(const Configuration& z, int t, int trials = 3, u64 seed = 1);
UnexpReport c_predicate(const Fp& f, const FlatUnion& z, int t, int trials = 3, u64 seed = 1);

// Closed forms for the codimension-2 skeleton of P^n; binomials with negative top are 0.
long skeleton_f(int m, int n);
// (dim [I(Z)]_m, dim [I(Z + mP)]_m).
std::pair<long, long> skeleton_dims(int n, int m);

struct SkeletonTReport {
  int n = 0, k = 0, l = 0;
  int flats = 0;           // (k-1)-flats spanned by k of the n+2 points
  int flats_vanishing = 0;
  int order_at_q = 0;      // minimum vanishing order along the sampled lines through Q
  bool nonzero = false;
  bool ok() const { return nonzero && flats == flats_vanishing && order_at_q >= l; }
};
SkeletonTReport verify_skeleton_T(int n, u64 seed = 1, u64 prime = 0);

}  // namespace gp
