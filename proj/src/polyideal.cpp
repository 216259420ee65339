#include "geproci/polyideal.hpp"

namespace gp {

namespace {

void gen_exps(int nvars, int deg, int pos, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (pos == nvars - 1) {
    cur[pos] = deg;
    out.push_back(cur);
    return;
  }
  for (int e = deg; e >= 0; --e) {
    cur[pos] = e;
    gen_exps(nvars, deg - e, pos + 1, cur, out);
  }
}

}  // namespace

MonomialBasis::MonomialBasis(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (degree < 0) return;
  std::vector<int> cur(nvars, 0);
  gen_exps(nvars, degree, 0, cur, exps_);
  for (size_t j = 0; j < exps_.size(); ++j) index_[key(exps_[j])] = j;
}

u64 MonomialBasis::key(const std::vector<int>& e) const {
  u64 k = 0;
  for (int x : e) k = k * static_cast<u64>(degree_ + 1) + static_cast<u64>(x);
  return k;
}

long MonomialBasis::index(const std::vector<int>& e) const {
  int s = 0;
  for (int x : e) {
    if (x < 0) return -1;
    s += x;
  }
  if (s != degree_ || static_cast<int>(e.size()) != nvars_) return -1;
  auto it = index_.find(key(e));
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

Vec MonomialBasis::eval(const Fp& f, const Vec& x) const {
  std::vector<Vec> pw(nvars_, Vec(degree_ + 1, 1));
  for (int v = 0; v < nvars_; ++v)
    for (int e = 1; e <= degree_; ++e) pw[v][e] = f.mul(pw[v][e - 1], x[v]);
  Vec out(exps_.size());
  for (size_t j = 0; j < exps_.size(); ++j) {
    u64 r = 1;
    for (int v = 0; v < nvars_; ++v)
      if (exps_[j][v]) r = f.mul(r, pw[v][exps_[j][v]]);
    out[j] = r;
  }
  return out;
}

u64 binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  u64 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<u64>(n - k + i) / static_cast<u64>(i);
  return r;
}

u64 factorial_mod(const Fp& f, int n) {
  u64 r = 1;
  for (int i = 2; i <= n; ++i) r = f.mul(r, static_cast<u64>(i));
  return r;
}

u64 e_m(const Fp& f, const std::vector<int>& e) {
  u64 r = 1;
  for (int x : e) r = f.mul(r, factorial_mod(f, x));
  return r;
}

Matrix fat_rows(const Fp& f, const ProjPoint& p, int mult, int t) {
  if (f.p <= static_cast<u64>(t)) throw Error("CharTooSmall", "prime must exceed the degree");
  int nv = static_cast<int>(p.c.size());
  MonomialBasis mb(nv, t);
  int order = std::min(mult - 1, t);
  MonomialBasis db(nv, order);
  // Powers of the point coordinates up to t.
  std::vector<Vec> pw(nv, Vec(t + 1, 1));
  for (int v = 0; v < nv; ++v)
    for (int e = 1; e <= t; ++e) pw[v][e] = f.mul(pw[v][e - 1], p.c[v]);
  Matrix m(db.size(), mb.size());
  for (size_t r = 0; r < db.size(); ++r) {
    const auto& dm = db.exps(r);
    for (size_t j = 0; j < mb.size(); ++j) {
      const auto& M = mb.exps(j);
      u64 val = 1;
      for (int v = 0; v < nv && val; ++v) {
        if (M[v] < dm[v]) {
          val = 0;
          break;
        }
        for (int k = 0; k < dm[v]; ++k) val = f.mul(val, static_cast<u64>(M[v] - k));
        val = f.mul(val, pw[v][M[v] - dm[v]]);
      }
      m(r, j) = val;
    }
  }
  return m;
}

Matrix interp_matrix(const Fp& f, const FatPointScheme& x, int t) {
  if (f.p <= static_cast<u64>(t)) throw Error("CharTooSmall", "prime must exceed the degree");
  if (x.empty()) return Matrix(0, 0);
  int nv = static_cast<int>(x[0].p.c.size());
  MonomialBasis mb(nv, t);
  Matrix out(0, mb.size());
  for (const auto& fp : x) {
    if (fp.mult == 1) {
      out.append_row(mb.eval(f, fp.p.c));
    } else {
      Matrix r = fat_rows(f, fp.p, fp.mult, t);
      out.a.insert(out.a.end(), r.a.begin(), r.a.end());
      out.rows += r.rows;
    }
  }
  return out;
}

Matrix interp_matrix(const Fp& f, const std::vector<ProjPoint>& pts, int t) {
  if (f.p <= static_cast<u64>(t)) throw Error("CharTooSmall", "prime must exceed the degree");
  if (pts.empty()) return Matrix(0, 0);
  MonomialBasis mb(static_cast<int>(pts[0].c.size()), t);
  Matrix out(pts.size(), mb.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    Vec r = mb.eval(f, pts[i].c);
    std::copy(r.begin(), r.end(), out.row(i));
  }
  return out;
}

int ideal_dim(const Fp& f, const FatPointScheme& x, int t) {
  if (x.empty()) return 0;
  Matrix m = interp_matrix(f, x, t);
  return static_cast<int>(m.cols - rank(f, m));
}

int ideal_dim(const Fp& f, const std::vector<ProjPoint>& pts, int t) {
  if (pts.empty()) return 0;
  Matrix m = interp_matrix(f, pts, t);
  return static_cast<int>(m.cols - rank(f, m));
}

int hilbert_function(const Fp& f, const std::vector<ProjPoint>& pts, int t) {
  if (pts.empty()) return 0;
  return static_cast<int>(rank(f, interp_matrix(f, pts, t)));
}

std::vector<int> h_vector(const Fp& f, const std::vector<ProjPoint>& pts) {
  std::vector<int> h;
  int prev = 0;
  for (int t = 0; prev < static_cast<int>(pts.size()); ++t) {
    int hf = hilbert_function(f, pts, t);
    h.push_back(hf - prev);
    prev = hf;
  }
  return h;
}

std::vector<Vec> ideal_basis(const Fp& f, const std::vector<ProjPoint>& pts, int t) {
  return kernel_basis(f, interp_matrix(f, pts, t));
}

u64 eval_form(const Fp& f, const MonomialBasis& mb, const Vec& coeffs, const Vec& x) {
  Vec vals = mb.eval(f, x);
  u64 s = 0;
  for (size_t j = 0; j < vals.size(); ++j) s = (s + coeffs[j] * vals[j]) % f.p;
  return s;
}

Vec mul_monomial(const Fp& f, const MonomialBasis& from, const MonomialBasis& to, const Vec& coeffs,
                 const std::vector<int>& e) {
  (void)f;
  Vec out(to.size(), 0);
  std::vector<int> m(from.nvars());
  for (size_t j = 0; j < from.size(); ++j) {
    if (!coeffs[j]) continue;
    for (int v = 0; v < from.nvars(); ++v) m[v] = from.exps(j)[v] + e[v];
    out[to.index(m)] = coeffs[j];
  }
  return out;
}

Matrix macaulay_matrix(const Fp& f, const std::vector<ProjPoint>& z, int d, const ProjPoint& q) {
  if (f.p <= static_cast<u64>(d)) throw Error("CharTooSmall", "prime must exceed the degree");
  int nv = static_cast<int>(q.c.size());
  MonomialBasis mb(nv, d), lb(nv, d - 1);
  Matrix t(mb.size(), z.size() + lb.size());
  u64 dfact = factorial_mod(f, d);
  std::vector<Vec> vals;
  for (const auto& p : z) vals.push_back(mb.eval(f, p.c));
  std::vector<int> m(nv);
  for (size_t r = 0; r < mb.size(); ++r) {
    const auto& M = mb.exps(r);
    u64 cm = f.div(dfact, e_m(f, M));
    for (size_t i = 0; i < z.size(); ++i) t(r, i) = f.mul(cm, vals[i][r]);
    for (int k = 0; k < nv; ++k) {
      if (M[k] == 0) continue;
      m = M;
      --m[k];
      t(r, z.size() + static_cast<size_t>(lb.index(m))) = q.c[k];
    }
  }
  return t;
}

Vec interpolate(const Fp& f, const Vec& xs, const Vec& ys) {
  size_t n = xs.size();
  Matrix v(n, n);
  for (size_t i = 0; i < n; ++i) {
    u64 pw = 1;
    for (size_t j = 0; j < n; ++j) {
      v(i, j) = pw;
      pw = f.mul(pw, xs[i]);
    }
  }
  Vec c;
  if (!solve(f, v, ys, c)) throw Error("InterpolationFailed", "sample abscissae must be distinct");
  return c;
}

int poly_degree(const Vec& c) {
  for (size_t i = c.size(); i > 0; --i)
    if (c[i - 1]) return static_cast<int>(i - 1);
  return -1;
}

namespace {

Vec add_scaled(const Fp& f, const Vec& a, u64 s, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], f.mul(s, b[i]));
  return r;
}

// Coefficients in z of F(u + z v), lowest degree first.
Vec restrict_to_line(const Fp& f, const MonomialBasis& mb, const Vec& F, const Vec& u, const Vec& v) {
  int deg = mb.degree();
  Vec xs, ys;
  for (int s = 0; s <= deg; ++s) {
    xs.push_back(static_cast<u64>(s));
    ys.push_back(eval_form(f, mb, F, add_scaled(f, u, static_cast<u64>(s), v)));
  }
  return interpolate(f, xs, ys);
}

u64 sylvester_resultant(const Fp& f, const Vec& pf, const Vec& pg) {
  int a = static_cast<int>(pf.size()) - 1, b = static_cast<int>(pg.size()) - 1;
  int n = a + b;
  Matrix s(n, n);
  for (int r = 0; r < b; ++r)
    for (int k = 0; k <= a; ++k) s(r, r + k) = pf[a - k];
  for (int r = 0; r < a; ++r)
    for (int k = 0; k <= b; ++k) s(b + r, r + k) = pg[b - k];
  return det(f, s);
}

bool is_zero(const Vec& v) {
  for (u64 x : v)
    if (x) return false;
  return true;
}

}  // namespace

bool coprime_plane_curves(const Fp& f, const Vec& F, int a, const Vec& G, int b, Rng& rng) {
  if (is_zero(F) || is_zero(G)) throw Error("ZeroForm", "coprimality of the zero form is undefined");
  if (a == 0 || b == 0) return true;
  MonomialBasis ma(3, a), mbb(3, b);
  for (int attempt = 0; attempt < 3; ++attempt) {
    Vec A(3), B(3), V(3);
    for (;;) {
      for (int i = 0; i < 3; ++i) {
        A[i] = random_elem(f, rng);
        B[i] = random_elem(f, rng);
        V[i] = random_elem(f, rng);
      }
      if (eval_form(f, ma, F, V) && eval_form(f, mbb, G, V)) break;
    }
    // Res(x) = Res_z(F(xA + B + zV), G(xA + B + zV)) has degree <= ab.
    bool nonzero = false;
    for (int k = 0; k <= a * b && !nonzero; ++k) {
      u64 x = random_elem(f, rng);
      Vec u = add_scaled(f, B, x, A);
      Vec pf = restrict_to_line(f, ma, F, u, V);
      Vec pg = restrict_to_line(f, mbb, G, u, V);
      nonzero = sylvester_resultant(f, pf, pg) != 0;
    }
    if (nonzero) return true;
  }
  return false;
}

bool generated_to_next_degree(const Fp& f, const std::vector<ProjPoint>& pts, int n, int d) {
  MonomialBasis md(n + 1, d), mn(n + 1, d + 1);
  std::vector<Vec> basis;
  if (pts.empty()) {
    for (size_t j = 0; j < md.size(); ++j) {
      Vec v(md.size(), 0);
      v[j] = 1;
      basis.push_back(v);
    }
  } else {
    basis = ideal_basis(f, pts, d);
  }
  Matrix span(0, mn.size());
  for (const auto& F : basis)
    for (int i = 0; i <= n; ++i) {
      std::vector<int> e(n + 1, 0);
      e[i] = 1;
      span.append_row(mul_monomial(f, md, mn, F, e));
    }
  int target = pts.empty() ? static_cast<int>(mn.size()) : ideal_dim(f, pts, d + 1);
  return static_cast<int>(rank(f, span)) == target;
}

}  // namespace gp
