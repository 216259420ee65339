#include "geproci/projgeom.hpp"

#include <unordered_map>

namespace gp {

ProjPoint make_point(const Fp& f, Vec coords) {
  size_t i = 0;
  while (i < coords.size() && coords[i] % f.p == 0) ++i;
  if (i == coords.size()) throw Error("ZeroVector", "all coordinates vanish");
  u64 s = f.inv(coords[i] % f.p);
  for (auto& x : coords) x = f.mul(x % f.p, s);
  return ProjPoint{std::move(coords)};
}

u64 random_elem(const Fp& f, Rng& rng) {
  return std::uniform_int_distribution<u64>(0, f.p - 1)(rng);
}

ProjPoint random_point(const Fp& f, int n, Rng& rng) {
  for (;;) {
    Vec v(n + 1);
    for (auto& x : v) x = random_elem(f, rng);
    bool nz = false;
    for (auto x : v) nz = nz || x != 0;
    if (nz) return make_point(f, std::move(v));
  }
}

Matrix coords_matrix(const std::vector<ProjPoint>& pts) {
  if (pts.empty()) throw Error("EmptyInput", "no points");
  size_t cols = pts[0].c.size();
  Matrix m(pts.size(), cols);
  for (size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].c.size() != cols) throw Error("MixedAmbient", "points live in different spaces");
    std::copy(pts[i].c.begin(), pts[i].c.end(), m.row(i));
  }
  return m;
}

int span_dim(const Fp& f, const std::vector<ProjPoint>& pts) {
  return static_cast<int>(rank(f, coords_matrix(pts))) - 1;
}

Flat span_flat(const Fp& f, const std::vector<ProjPoint>& pts) {
  Matrix m = coords_matrix(pts);
  Echelon e = rref(f, m);
  Flat fl;
  fl.ambient_dim = static_cast<int>(m.cols) - 1;
  fl.dim = static_cast<int>(e.pivots.size()) - 1;
  fl.basis = std::move(e.R);
  return fl;
}

bool flat_contains(const Fp& f, const Flat& fl, const ProjPoint& p) {
  // Reduce p against the RREF basis; p lies on the flat iff the remainder is zero.
  Vec v = p.c;
  for (size_t i = 0; i < fl.basis.rows; ++i) {
    size_t c = 0;
    while (fl.basis(i, c) == 0) ++c;
    u64 coef = v[c];
    if (!coef) continue;
    for (size_t j = c; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(coef, fl.basis(i, j)));
  }
  for (auto x : v)
    if (x) return false;
  return true;
}

ProjPoint random_point_on(const Fp& f, const Flat& fl, Rng& rng) {
  for (;;) {
    Vec v(fl.basis.cols, 0);
    for (size_t i = 0; i < fl.basis.rows; ++i) {
      u64 s = random_elem(f, rng);
      for (size_t j = 0; j < v.size(); ++j) v[j] = f.add(v[j], f.mul(s, fl.basis(i, j)));
    }
    bool nz = false;
    for (auto x : v) nz = nz || x != 0;
    if (nz) return make_point(f, std::move(v));
  }
}

namespace {

// Coordinates (s, t) with x = s*a + t*b; throws if x is off the line.
std::pair<u64, u64> line_coords(const Fp& f, const ProjPoint& a, const ProjPoint& b, const ProjPoint& x) {
  size_t n = a.c.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      u64 d = f.sub(f.mul(a.c[i], b.c[j]), f.mul(a.c[j], b.c[i]));
      if (!d) continue;
      u64 di = f.inv(d);
      u64 s = f.mul(f.sub(f.mul(x.c[i], b.c[j]), f.mul(x.c[j], b.c[i])), di);
      u64 t = f.mul(f.sub(f.mul(a.c[i], x.c[j]), f.mul(a.c[j], x.c[i])), di);
      for (size_t k = 0; k < n; ++k) {
        if (f.add(f.mul(s, a.c[k]), f.mul(t, b.c[k])) != x.c[k]) throw Error("NotCollinear", "point off the line");
      }
      return {s, t};
    }
  throw Error("NotDistinct", "points coincide");
}

void check_distinct(const std::vector<const ProjPoint*>& ps) {
  for (size_t i = 0; i < ps.size(); ++i) {
    if (ps[i]->c.size() != ps[0]->c.size()) throw Error("MixedAmbient", "points live in different spaces");
    for (size_t j = i + 1; j < ps.size(); ++j)
      if (*ps[i] == *ps[j]) throw Error("NotDistinct", "repeated point");
  }
}

}  // namespace

u64 cross_ratio(const Fp& f, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d) {
  check_distinct({&a, &b, &c, &d});
  auto [c1, c2] = line_coords(f, a, b, c);
  auto [d1, d2] = line_coords(f, a, b, d);
  // In the frame a=(1,0), b=(0,1) the general formula reduces to c2 d1 / (c1 d2).
  return f.div(f.mul(c2, d1), f.mul(c1, d2));
}

ProjPoint harmonic_conjugate(const Fp& f, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  check_distinct({&a, &b, &c});
  auto [c1, c2] = line_coords(f, a, b, c);
  Vec v(a.c.size());
  for (size_t k = 0; k < v.size(); ++k) v[k] = f.sub(f.mul(c2, b.c[k]), f.mul(c1, a.c[k]));
  return make_point(f, std::move(v));
}

ProjPoint segre(const Fp& f, const ProjPoint& x, const ProjPoint& y) {
  if (x.c.size() != 2 || y.c.size() != 2) throw Error("NotP1", "segre needs two points of P^1");
  return make_point(f, {f.mul(x.c[0], y.c[0]), f.mul(x.c[0], y.c[1]), f.mul(x.c[1], y.c[0]), f.mul(x.c[1], y.c[1])});
}

ProjPoint project_point(const Fp& f, const ProjPoint& p, const ProjPoint& x) {
  size_t k = p.c.size();
  while (k > 0 && p.c[k - 1] == 0) --k;
  if (k == 0) throw Error("ZeroVector", "vertex is zero");
  --k;
  Vec y;
  y.reserve(p.c.size() - 1);
  for (size_t i = 0; i < p.c.size(); ++i) {
    if (i == k) continue;
    y.push_back(f.sub(f.mul(x.c[i], p.c[k]), f.mul(x.c[k], p.c[i])));
  }
  for (auto v : y)
    if (v) return make_point(f, std::move(y));
  throw Error("VertexInZ", "projected point coincides with the vertex");
}

std::vector<ProjPoint> project_from(const Fp& f, const ProjPoint& p, const std::vector<ProjPoint>& z) {
  std::vector<ProjPoint> out;
  out.reserve(z.size());
  std::unordered_map<ProjPoint, size_t, ProjPointHash> seen;
  for (size_t i = 0; i < z.size(); ++i) {
    out.push_back(project_point(f, p, z[i]));
    auto [it, fresh] = seen.emplace(out.back(), i);
    if (!fresh)
      throw Error("CollisionDetected", "points " + std::to_string(it->second) + " and " + std::to_string(i) + " collide");
  }
  return out;
}

}  // namespace gp
