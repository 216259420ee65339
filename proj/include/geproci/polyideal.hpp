#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "geproci/projgeom.hpp"

namespace gp {

// Monomials of a fixed degree in lex-descending order: x0^t, x0^(t-1) x1, ...
class MonomialBasis {
 public:
  MonomialBasis(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  size_t size() const { return exps_.size(); }
  const std::vector<int>& exps(size_t j) const { return exps_[j]; }
  // Index of the monomial with the given exponents; -1 if absent.
  long index(const std::vector<int>& e) const;
  // Values of all monomials at a point.
  Vec eval(const Fp& f, const Vec& x) const;

 private:
  int nvars_, degree_;
  std::vector<std::vector<int>> exps_;
  std::unordered_map<u64, size_t> index_;
  u64 key(const std::vector<int>& e) const;
};

u64 binom(int n, int k);

struct FatPoint {
  ProjPoint p;
  int mult = 1;
};
using FatPointScheme = std::vector<FatPoint>;

// Rows d^m M_j (P) for all m of degree min(s-1, t); s = multiplicity.
Matrix interp_matrix(const Fp& f, const FatPointScheme& x, int t);
Matrix interp_matrix(const Fp& f, const std::vector<ProjPoint>& pts, int t);
// Rows of the fat point sP only.
Matrix fat_rows(const Fp& f, const ProjPoint& p, int mult, int t);

int ideal_dim(const Fp& f, const FatPointScheme& x, int t);
int ideal_dim(const Fp& f, const std::vector<ProjPoint>& pts, int t);
int hilbert_function(const Fp& f, const std::vector<ProjPoint>& pts, int t);
std::vector<int> h_vector(const Fp& f, const std::vector<ProjPoint>& pts);

// Basis of [I(Z)]_t as coefficient vectors in MonomialBasis(n+1, t).
std::vector<Vec> ideal_basis(const Fp& f, const std::vector<ProjPoint>& pts, int t);

u64 eval_form(const Fp& f, const MonomialBasis& mb, const Vec& coeffs, const Vec& x);
// Product of a form of degree d with the monomial x^e, as a vector in degree d + |e|.
Vec mul_monomial(const Fp& f, const MonomialBasis& from, const MonomialBasis& to, const Vec& coeffs,
                 const std::vector<int>& e);

// T(Z, dQ) = [T1 | T2]: rows indexed by degree-d monomials M, T1 entries
// (d!/e_M) M(P_i), T2 entries q_k when M = m x_k.
Matrix macaulay_matrix(const Fp& f, const std::vector<ProjPoint>& z, int d, const ProjPoint& q);
u64 factorial_mod(const Fp& f, int n);
u64 e_m(const Fp& f, const std::vector<int>& e);

// Coefficients c_0..c_k of the polynomial through (xs[i], ys[i]).
Vec interpolate(const Fp& f, const Vec& xs, const Vec& ys);
int poly_degree(const Vec& c);

// gcd(F, G) = 1 for ternary forms, decided by resultants after random
// coordinate changes.
bool coprime_plane_curves(const Fp& f, const Vec& F, int a, const Vec& G, int b, Rng& rng);

bool generated_to_next_degree(const Fp& f, const std::vector<ProjPoint>& pts, int n, int d);

}  // namespace gp
