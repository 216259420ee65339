#include "geproci/unexpected.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace gp {

namespace {

using Sampler = std::function<std::vector<ProjPoint>(int t, Rng& rng)>;

long full_dim(int nv, int t) { return t < 0 ? 0 : static_cast<long>(binom(t + nv - 1, nv - 1)); }

long points_ideal_dim(const Fp& f, int n, const std::vector<ProjPoint>& pts, int t) {
  if (pts.empty()) return full_dim(n + 1, t);
  return ideal_dim(f, pts, t);
}

std::vector<ProjPoint> dedupe(std::vector<ProjPoint> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

long adim_impl(const Fp& f, int n, const Sampler& sample, const std::function<bool(const ProjPoint&)>& in_z, int t,
               int m, int trials, u64 seed, bool shortcut) {
  if (f.p <= static_cast<u64>(std::max(t, m))) throw Error("CharTooSmall", "prime must exceed the degree");
  Rng rng = make_rng(seed, 0x5a17012d);
  long best = std::numeric_limits<long>::max();
  for (int k = 0; k < trials; ++k) {
    ProjPoint p = random_point(f, n, rng);
    while (in_z(p)) p = random_point(f, n, rng);
    auto pts = sample(t, rng);
    long dim;
    if (shortcut && t == m) {
      std::vector<ProjPoint> image;
      for (const auto& x : pts) image.push_back(project_point(f, p, x));
      dim = points_ideal_dim(f, n - 1, dedupe(image), t);
    } else {
      Matrix mat = pts.empty() ? Matrix(0, full_dim(n + 1, t)) : interp_matrix(f, pts, t);
      Matrix fr = fat_rows(f, p, m, t);
      for (size_t r = 0; r < fr.rows; ++r) mat.append_row(fr.row_vec(r));
      dim = static_cast<long>(mat.cols - rank(f, mat));
    }
    best = std::min(best, dim);
  }
  return best;
}

Sampler config_sampler(const Configuration& z) {
  return [&z](int, Rng&) { return z.points; };
}

Sampler flat_sampler(const Fp& f, const FlatUnion& fu) {
  return [f, &fu](int t, Rng& rng) {
    std::vector<ProjPoint> pts;
    for (const auto& fl : fu.flats) {
      if (fl.dim == 0) {
        pts.push_back(random_point_on(f, fl, rng));
        continue;
      }
      long count = static_cast<long>(binom(t + fl.dim, fl.dim));
      for (long i = 0; i < count; ++i) pts.push_back(random_point_on(f, fl, rng));
    }
    return dedupe(pts);
  };
}

std::function<bool(const ProjPoint&)> config_membership(const Configuration& z) {
  return [&z](const ProjPoint& p) { return std::find(z.points.begin(), z.points.end(), p) != z.points.end(); };
}

std::function<bool(const ProjPoint&)> flat_membership(const Fp& f, const FlatUnion& fu) {
  return [f, &fu](const ProjPoint& p) {
    return std::any_of(fu.flats.begin(), fu.flats.end(), [&](const Flat& fl) { return flat_contains(f, fl, p); });
  };
}

}  // namespace

long adim(const Configuration& z, int t, int m, int trials, u64 seed) {
  return adim_impl(z.fp(), z.ambient_dim, config_sampler(z), config_membership(z), t, m, trials, seed, true);
}

long adim_direct(const Configuration& z, int t, int m, int trials, u64 seed) {
  return adim_impl(z.fp(), z.ambient_dim, config_sampler(z), config_membership(z), t, m, trials, seed, false);
}

long adim(const Fp& f, const FlatUnion& z, int t, int m, int trials, u64 seed) {
  return adim_impl(f, z.ambient_dim, flat_sampler(f, z), flat_membership(f, z), t, m, trials, seed, true);
}

long vdim(const Configuration& z, int t, int m) {
  int n = z.ambient_dim;
  return points_ideal_dim(z.fp(), n, z.points, t) - static_cast<long>(m >= 1 ? binom(m + n - 1, n) : 0);
}

long flat_union_ideal_dim(const Fp& f, const FlatUnion& z, int t, u64 seed) {
  Rng rng = make_rng(seed, 0x5a17012e);
  auto sample = flat_sampler(f, z);
  // Two independent samplings; any excess over the true dimension is a sampling accident.
  long a = points_ideal_dim(f, z.ambient_dim, sample(t, rng), t);
  long b = points_ideal_dim(f, z.ambient_dim, sample(t, rng), t);
  return std::min(a, b);
}

long vdim(const Fp& f, const FlatUnion& z, int t, int m, u64 seed) {
  int n = z.ambient_dim;
  return flat_union_ideal_dim(f, z, t, seed) - static_cast<long>(m >= 1 ? binom(m + n - 1, n) : 0);
}

UnexpReport c_predicate(const Configuration& z, int t, int trials, u64 seed) {
  UnexpReport r;
  r.t = r.m = t;
  r.adim = adim(z, t, t, trials, seed);
  r.vdim = vdim(z, t, t);
  r.unexpected = r.adim > std::max(0L, r.vdim);
  return r;
}

UnexpReport c_predicate(const Fp& f, const FlatUnion& z, int t, int trials, u64 seed) {
  UnexpReport r;
  r.t = r.m = t;
  r.adim = adim(f, z, t, t, trials, seed);
  r.vdim = vdim(f, z, t, t, seed);
  r.unexpected = r.adim > std::max(0L, r.vdim);
  return r;
}

namespace {

long sbinom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return static_cast<long>(binom(static_cast<int>(n), static_cast<int>(k)));
}

}  // namespace

long skeleton_f(int m, int n) {
  long r = sbinom(n + 1, 2);
  return sbinom(m - r + n - 1, n - 1) - sbinom(m - 1, n) - (n + 1) * sbinom(m - 1, n - 1) + sbinom(m + n - 1, n);
}

std::pair<long, long> skeleton_dims(int n, int m) {
  long r = sbinom(n + 1, 2);
  long idim = m < n ? 0 : sbinom(m - 1, n) + (n + 1) * sbinom(m - 1, n - 1);
  long cone = m < r ? 0 : sbinom(m - r + n - 1, n - 1);
  return {idim, cone};
}

SkeletonTReport verify_skeleton_T(int n, u64 seed, u64 prime) {
  if (n < 2 || n > 7) throw Error("BadParameter", "n must lie in 2..7");
  Fp f = make_field({}, prime).field();
  Rng rng = make_rng(seed, 0x5a17012f);
  SkeletonTReport rep;
  rep.n = n;
  rep.k = n / 2;
  rep.l = (n + 1) / 2;
  const int k = rep.k;
  ProjPoint q = random_point(f, n, rng);
  const Vec& a = q.c;
  // T is squarefree of degree k+1; accumulate its coefficient on each (k+1)-subset.
  MonomialBasis mb(n + 1, k + 1);
  Vec coeff(mb.size(), 0);
  std::vector<int> perm(static_cast<size_t>(n) + 1);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) inversions += perm[i] > perm[j];
    u64 w = 1;
    for (int i = 1; i <= k; ++i) w = f.mul(w, f.pow(a[perm[i]], i));
    for (int i = k + 1; i <= n; ++i) w = f.mul(w, f.pow(a[perm[i]], i - k));
    std::vector<int> e(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i <= k; ++i) e[perm[i]] = 1;
    size_t idx = static_cast<size_t>(mb.index(e));
    coeff[idx] = inversions % 2 ? f.sub(coeff[idx], w) : f.add(coeff[idx], w);
  } while (std::next_permutation(perm.begin(), perm.end()));
  rep.nonzero = std::any_of(coeff.begin(), coeff.end(), [](u64 c) { return c != 0; });

  std::vector<ProjPoint> verts;
  for (int i = 0; i <= n; ++i) {
    Vec v(n + 1, 0);
    v[i] = 1;
    verts.push_back(ProjPoint{v});
  }
  verts.push_back(ProjPoint{Vec(n + 1, 1)});
  // Each (k-1)-flat is spanned by k of the n+2 points.
  std::vector<bool> pick(verts.size(), false);
  std::fill(pick.end() - k, pick.end(), true);
  do {
    std::vector<ProjPoint> span;
    for (size_t i = 0; i < verts.size(); ++i)
      if (pick[i]) span.push_back(verts[i]);
    Flat fl = span_flat(f, span);
    ++rep.flats;
    bool vanish = true;
    long samples = static_cast<long>(binom(k + 1 + k - 1, k - 1)) + 2;
    for (long s = 0; s < samples && vanish; ++s) vanish = eval_form(f, mb, coeff, random_point_on(f, fl, rng).c) == 0;
    rep.flats_vanishing += vanish;
  } while (std::next_permutation(pick.begin(), pick.end()));

  rep.order_at_q = std::numeric_limits<int>::max();
  for (int line = 0; line < 5; ++line) {
    ProjPoint b = random_point(f, n, rng);
    Vec xs, ys;
    for (int s = 0; s <= k + 1; ++s) {
      Vec x(n + 1);
      for (int i = 0; i <= n; ++i) x[i] = f.add(q.c[i], f.mul(static_cast<u64>(s), b.c[i]));
      xs.push_back(static_cast<u64>(s));
      ys.push_back(eval_form(f, mb, coeff, x));
    }
    Vec c = interpolate(f, xs, ys);
    int order = 0;
    while (order < static_cast<int>(c.size()) && c[order] == 0) ++order;
    rep.order_at_q = std::min(rep.order_at_q, order);
  }
  return rep;
}

}  // namespace gp
