#include <doctest.h>

#include <algorithm>

#include "geproci/polyideal.hpp"

using namespace gp;

namespace {

const Fp F{1073741827};

u64 binom_oracle(int n, int k) {
  if (k < 0 || n < k) return 0;
  u64 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<u64>(n - k + i) / static_cast<u64>(i);
  return r;
}

u64 monomial_at(const std::vector<int>& e, const Vec& x) {
  u64 v = 1;
  for (size_t i = 0; i < e.size(); ++i) v = F.mul(v, F.pow(x[i], e[i]));
  return v;
}

std::vector<ProjPoint> random_points(int n, int k, Rng& rng) {
  std::vector<ProjPoint> pts;
  for (int i = 0; i < k; ++i) pts.push_back(random_point(F, n, rng));
  return pts;
}

}  // namespace

TEST_CASE("monomial basis is lex descending and indexable") {
  for (int n = 1; n <= 4; ++n)
    for (int t = 0; t <= 5; ++t) {
      MonomialBasis mb(n + 1, t);
      CHECK(mb.size() == binom_oracle(n + t, n));
      CHECK(mb.exps(0)[0] == t);
      for (size_t j = 0; j < mb.size(); ++j) {
        CHECK(mb.index(mb.exps(j)) == static_cast<long>(j));
        if (j) CHECK(mb.exps(j - 1) > mb.exps(j));
      }
    }
  CHECK(binom(7, 3) == 35);
  CHECK(binom(3, 7) == 0);
}

TEST_CASE("general points impose independent conditions") {
  Rng rng = make_rng(21, 1);
  for (int n = 2; n <= 4; ++n)
    for (int t = 1; t <= 4; ++t)
      for (int k : {1, 3, 7, 12, 20}) {
        auto pts = random_points(n, k, rng);
        long expect = std::max<long>(0, static_cast<long>(binom_oracle(n + t, n)) - k);
        CHECK(ideal_dim(F, pts, t) == expect);
        CHECK(ideal_dim(F, pts, t) + hilbert_function(F, pts, t) == static_cast<int>(binom_oracle(n + t, n)));
      }
}

TEST_CASE("h-vector sums to the number of points") {
  Rng rng = make_rng(22, 1);
  for (int k : {1, 4, 9, 15}) {
    auto pts = random_points(2, k, rng);
    auto h = h_vector(F, pts);
    int s = 0;
    for (int x : h) s += x;
    CHECK(s == k);
    CHECK(h[0] == 1);
  }
  // Three collinear points in the plane: h = (1,1,1).
  std::vector<ProjPoint> line = {make_point(F, {1, 0, 0}), make_point(F, {0, 1, 0}), make_point(F, {1, 1, 0})};
  CHECK(h_vector(F, line) == std::vector<int>{1, 1, 1});
}

TEST_CASE("fat points") {
  Rng rng = make_rng(23, 1);
  for (int n = 2; n <= 3; ++n)
    for (int m = 1; m <= 4; ++m)
      for (int t = m - 1; t <= m + 2; ++t) {
        FatPointScheme x = {{random_point(F, n, rng), m}};
        long expect = static_cast<long>(binom_oracle(n + t, n)) - static_cast<long>(binom_oracle(n + m - 1, n));
        CHECK(ideal_dim(F, x, t) == expect);
      }
}

TEST_CASE("fat rows are first derivatives for double points") {
  Rng rng = make_rng(24, 1);
  ProjPoint p = random_point(F, 2, rng);
  Matrix rows = fat_rows(F, p, 2, 3);
  MonomialBasis mb(3, 3);
  REQUIRE(rows.rows == 3);
  REQUIRE(rows.cols == mb.size());
  // Each row is the gradient in one variable: d/dx_k x^e = e_k x^(e - e_k).
  for (size_t k = 0; k < 3; ++k)
    for (size_t j = 0; j < mb.size(); ++j) {
      std::vector<int> e = mb.exps(j);
      u64 want = 0;
      if (e[k] > 0) {
        int c = e[k];
        e[k] -= 1;
        want = F.mul(static_cast<u64>(c), monomial_at(e, p.c));
      }
      CHECK(rows(k, j) == want);
    }
}

TEST_CASE("ideal basis vanishes on the points and multiplies correctly") {
  Rng rng = make_rng(25, 1);
  auto pts = random_points(3, 6, rng);
  MonomialBasis m2(4, 2), m3(4, 3);
  auto basis = ideal_basis(F, pts, 2);
  CHECK(basis.size() == 4);
  for (const auto& v : basis) {
    for (const auto& p : pts) CHECK(eval_form(F, m2, v, p.c) == 0);
    Vec w = mul_monomial(F, m2, m3, v, {0, 1, 0, 0});
    Vec x = random_point(F, 3, rng).c;
    CHECK(eval_form(F, m3, w, x) == F.mul(eval_form(F, m2, v, x), x[1]));
  }
}

TEST_CASE("interpolation recovers a polynomial") {
  Vec coeffs = {5, 0, 7, 1};
  Vec xs, ys;
  for (u64 s = 1; s <= 6; ++s) {
    u64 y = 0;
    for (size_t i = coeffs.size(); i-- > 0;) y = F.add(F.mul(y, s), coeffs[i]);
    xs.push_back(s);
    ys.push_back(y);
  }
  Vec c = interpolate(F, xs, ys);
  CHECK(poly_degree(c) == 3);
  for (size_t i = 0; i < coeffs.size(); ++i) CHECK(c[i] == coeffs[i]);
}

TEST_CASE("falling factorial helpers") {
  CHECK(factorial_mod(F, 5) == 120);
  CHECK(e_m(F, {2, 0, 3}) == 12);
}

TEST_CASE("coprimality of plane curves") {
  Rng rng = make_rng(26, 1);
  MonomialBasis m1(3, 1), m2(3, 2);
  Vec x(m1.size(), 0), y(m1.size(), 0);
  x[static_cast<size_t>(m1.index({1, 0, 0}))] = 1;
  y[static_cast<size_t>(m1.index({0, 1, 0}))] = 1;
  CHECK(coprime_plane_curves(F, x, 1, y, 1, rng));
  Vec xy(m2.size(), 0), xz(m2.size(), 0);
  xy[static_cast<size_t>(m2.index({1, 1, 0}))] = 1;
  xz[static_cast<size_t>(m2.index({1, 0, 1}))] = 1;
  CHECK_FALSE(coprime_plane_curves(F, xy, 2, xz, 2, rng));
  Vec z = {0, 0, 1};
  CHECK(coprime_plane_curves(F, xy, 2, z, 1, rng));
}
