#include "geproci/weddle.hpp"

#include <algorithm>

namespace gp {

Matrix weddle_matrix(const Fp& f, const std::vector<ProjPoint>& z, int d, const ProjPoint& p) {
  Matrix m = interp_matrix(f, z, d);
  Matrix dr = fat_rows(f, p, d, d);
  for (size_t r = 0; r < dr.rows; ++r) m.append_row(dr.row_vec(r));
  return m;
}

namespace {

ProjPoint random_vertex(const Fp& f, const Configuration& z, Rng& rng) {
  for (;;) {
    ProjPoint p = random_point(f, z.ambient_dim, rng);
    if (std::find(z.points.begin(), z.points.end(), p) == z.points.end()) return p;
  }
}

}  // namespace

WeddleContext weddle_context(const Configuration& z, int d, u64 seed, int samples) {
  WeddleContext ctx;
  ctx.z = z;
  ctx.d = d;
  Fp f = z.fp();
  ctx.base = rref(f, interp_matrix(f, z.points, d));
  ctx.alpha = static_cast<int>(ctx.base.pivots.size());
  size_t ncols = ctx.base.R.cols;
  for (size_t j = 0; j < ncols; ++j)
    if (std::find(ctx.base.pivots.begin(), ctx.base.pivots.end(), j) == ctx.base.pivots.end())
      ctx.free_cols.push_back(j);
  Rng rng = make_rng(seed, 0x5a170065);
  std::vector<int> ranks;
  for (int s = 0; s < samples; ++s) ranks.push_back(weddle_rank(ctx, random_vertex(f, z, rng)));
  ctx.rho = *std::max_element(ranks.begin(), ranks.end());
  ctx.stable = std::all_of(ranks.begin(), ranks.end(), [&](int r) { return r == ctx.rho; });
  return ctx;
}

Matrix reduced_block(const WeddleContext& ctx, const ProjPoint& p) {
  Fp f = ctx.z.fp();
  Matrix dr = fat_rows(f, p, ctx.d, ctx.d);
  Matrix out(dr.rows, ctx.free_cols.size());
  for (size_t r = 0; r < dr.rows; ++r) {
    Vec row = dr.row_vec(r);
    for (size_t i = 0; i < ctx.base.pivots.size(); ++i) {
      u64 s = row[ctx.base.pivots[i]];
      if (!s) continue;
      for (size_t j = 0; j < row.size(); ++j) row[j] = f.sub(row[j], f.mul(s, ctx.base.R(i, j)));
    }
    for (size_t k = 0; k < ctx.free_cols.size(); ++k) out(r, k) = row[ctx.free_cols[k]];
  }
  return out;
}

int weddle_rank(const WeddleContext& ctx, const ProjPoint& p) {
  return ctx.alpha + static_cast<int>(rank(ctx.z.fp(), reduced_block(ctx, p)));
}

bool weddle_member(const WeddleContext& ctx, const ProjPoint& p) {
  for (const auto& z : ctx.z.points)
    if (z == p) throw Error("PointInZ", "the vertex lies in Z");
  return weddle_rank(ctx, p) < ctx.rho;
}

WeddleDegree weddle_degree(const WeddleContext& ctx, u64 seed, int lines) {
  Fp f = ctx.z.fp();
  int n = ctx.z.ambient_dim;
  size_t rows = binom(n + ctx.d - 1, n), cols = ctx.free_cols.size();
  if (rows != cols)
    throw Error("NotSquare", "reduced block is " + std::to_string(rows) + "x" + std::to_string(cols));
  WeddleDegree out;
  out.rows = rows;
  out.cols = cols;
  out.identically_zero = true;
  Rng rng = make_rng(seed, 0x5a170066);
  for (int l = 0; l < lines; ++l) {
    ProjPoint a = random_point(f, n, rng), b = random_point(f, n, rng);
    Vec xs, ys;
    for (size_t k = 0; k <= rows; ++k) {
      u64 s = static_cast<u64>(k + 1);
      Vec q(n + 1);
      for (int i = 0; i <= n; ++i) q[i] = f.add(a.c[i], f.mul(s, b.c[i]));
      xs.push_back(s);
      ys.push_back(det(f, reduced_block(ctx, ProjPoint{q})));
    }
    Vec c = interpolate(f, xs, ys);
    int deg = poly_degree(c);
    if (deg >= 0) {
      out.identically_zero = false;
      out.degree = std::max(out.degree, deg);
    }
  }
  return out;
}

namespace {

// Printed order x^2,y^2,z^2,w^2,xy,xz,xw,yz,yw,zw as exponent vectors.
std::vector<std::vector<int>> printed_columns() {
  std::vector<std::vector<int>> cols;
  for (int i = 0; i < 4; ++i) {
    std::vector<int> e(4, 0);
    e[i] = 2;
    cols.push_back(e);
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::vector<int> e(4, 0);
      e[i] = e[j] = 1;
      cols.push_back(e);
    }
  return cols;
}

// Raw (unnormalized) coordinates: rescaling a point rescales its row and hence the determinant.
std::vector<ProjPoint> reducible_fixture(u64 a, u64 b, u64 c) {
  return {ProjPoint{{1, 0, 0, 0}}, ProjPoint{{0, 1, 0, 0}}, ProjPoint{{0, 0, 1, 0}},
          ProjPoint{{a, 0, 0, 1}}, ProjPoint{{0, b, 0, 1}}, ProjPoint{{0, 0, c, 1}}};
}

u64 nonzero_elem(const Fp& f, Rng& rng) {
  u64 x = 0;
  while (!x) x = random_elem(f, rng);
  return x;
}

}  // namespace

Matrix reducible_weddle_matrix(const Fp& f, u64 a, u64 b, u64 c, const Vec& q) {
  // Derivative rows are linear in q, so they are built from the coordinate vector directly.
  Matrix lex(0, 10);
  Matrix zr = interp_matrix(f, reducible_fixture(a, b, c), 2);
  for (size_t r = 0; r < zr.rows; ++r) lex.append_row(zr.row_vec(r));
  Matrix dr = fat_rows(f, ProjPoint{q}, 2, 2);
  for (size_t r = 0; r < dr.rows; ++r) lex.append_row(dr.row_vec(r));
  MonomialBasis mb(4, 2);
  auto cols = printed_columns();
  Matrix out(10, 10);
  for (size_t j = 0; j < cols.size(); ++j) {
    size_t src = static_cast<size_t>(mb.index(cols[j]));
    for (size_t r = 0; r < 10; ++r) out(r, j) = lex(r, src);
  }
  return out;
}

ReducibleWeddleReport verify_reducible_weddle(u64 a, u64 b, u64 c, int samples, u64 seed, u64 prime) {
  FieldSpec fs = make_field({}, prime);
  Fp f = fs.field();
  Rng rng = make_rng(seed, 0x5a170067);
  ReducibleWeddleReport rep;
  rep.a = a ? a % f.p : nonzero_elem(f, rng);
  rep.b = b ? b % f.p : nonzero_elem(f, rng);
  rep.c = c ? c % f.p : nonzero_elem(f, rng);
  auto expected = [&](const Vec& q) {
    u64 lin = f.add(f.add(f.mul(f.mul(rep.b, rep.c), q[0]), f.mul(f.mul(rep.a, rep.c), q[1])),
                    f.sub(f.mul(f.mul(rep.a, rep.b), q[2]), f.mul(f.mul(2, f.mul(rep.a, f.mul(rep.b, rep.c))), q[3])));
    return f.mul(f.mul(2, f.mul(q[0], f.mul(q[1], q[2]))), lin);
  };
  rep.samples = samples;
  for (int s = 0; s < samples; ++s) {
    Vec q(4);
    for (auto& x : q) x = random_elem(f, rng);
    rep.agreements += det(f, reducible_weddle_matrix(f, rep.a, rep.b, rep.c, q)) == expected(q);
  }
  rep.det_matches = rep.agreements == samples;
  rep.vanishes_on_x0 = true;
  for (int s = 0; s < 10; ++s) {
    Vec q = {0, random_elem(f, rng), random_elem(f, rng), random_elem(f, rng)};
    rep.vanishes_on_x0 = rep.vanishes_on_x0 && det(f, reducible_weddle_matrix(f, rep.a, rep.b, rep.c, q)) == 0;
  }
  // The fourth plane bc x + ac y + ab z - 2abc w meets L_i = OP_i at l(P_i) O - l(O) P_i.
  Vec plane = {f.mul(rep.b, rep.c), f.mul(rep.a, rep.c), f.mul(rep.a, rep.b),
               f.neg(f.mul(2, f.mul(rep.a, f.mul(rep.b, rep.c))))};
  auto lin = [&](const ProjPoint& p) {
    u64 s = 0;
    for (int i = 0; i < 4; ++i) s = f.add(s, f.mul(plane[i], p.c[i]));
    return s;
  };
  auto z = reducible_fixture(rep.a, rep.b, rep.c);
  for (auto& p : z) p = make_point(f, p.c);
  ProjPoint o = make_point(f, {0, 0, 0, 1});
  u64 params[3] = {rep.a, rep.b, rep.c};
  rep.h_expected = rep.harmonic = true;
  for (int i = 0; i < 3; ++i) {
    const ProjPoint& p = z[static_cast<size_t>(i)];
    Vec hc(4);
    for (int k = 0; k < 4; ++k) hc[k] = f.sub(f.mul(lin(p), o.c[k]), f.mul(lin(o), p.c[k]));
    ProjPoint h = make_point(f, hc);
    rep.h.push_back(h);
    Vec want(4, 0);
    want[i] = f.mul(2, params[i]);
    want[3] = 1;
    rep.h_expected = rep.h_expected && h == make_point(f, want);
    rep.harmonic = rep.harmonic && cross_ratio(f, p, z[static_cast<size_t>(i) + 3], o, h) == f.neg(1);
  }
  return rep;
}

}  // namespace gp
