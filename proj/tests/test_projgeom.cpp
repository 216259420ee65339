#include <doctest.h>

#include <random>

#include "geproci/projgeom.hpp"

using namespace gp;

namespace {

const Fp F{1073741827};

// Cross ratio of points of a line through their parameters on the line A + sB.
u64 param_cross_ratio(u64 a, u64 b, u64 c, u64 d) {
  u64 num = F.mul(F.sub(c, a), F.sub(d, b));
  u64 den = F.mul(F.sub(c, b), F.sub(d, a));
  return F.div(num, den);
}

}  // namespace

TEST_CASE("points are normalized with leading coordinate one") {
  ProjPoint p = make_point(F, {0, 5, 10});
  CHECK(p.c == Vec{0, 1, 2});
  CHECK(make_point(F, {0, 3, 6}) == p);
  CHECK_THROWS_AS(make_point(F, {0, 0, 0}), Error);
}

TEST_CASE("spans and flats") {
  Rng rng = make_rng(1, 2);
  ProjPoint a = random_point(F, 3, rng), b = random_point(F, 3, rng), c = random_point(F, 3, rng);
  CHECK(span_dim(F, {a}) == 0);
  CHECK(span_dim(F, {a, b}) == 1);
  CHECK(span_dim(F, {a, b, c}) == 2);
  Flat l = span_flat(F, {a, b});
  for (int i = 0; i < 20; ++i) CHECK(flat_contains(F, l, random_point_on(F, l, rng)));
  CHECK_FALSE(flat_contains(F, l, c));
  ProjPoint m = random_point_on(F, l, rng);
  CHECK(span_flat(F, {a, m}) == l);
}

TEST_CASE("cross ratio agrees with the parameter formula") {
  Rng rng = make_rng(3, 4);
  for (int t = 0; t < 50; ++t) {
    Vec A = random_point(F, 3, rng).c, B = random_point(F, 3, rng).c;
    u64 s[4];
    std::vector<ProjPoint> pts;
    for (auto& x : s) {
      x = random_elem(F, rng);
      Vec v(4);
      for (int i = 0; i < 4; ++i) v[i] = F.add(A[i], F.mul(x, B[i]));
      pts.push_back(make_point(F, v));
    }
    CHECK(cross_ratio(F, pts[0], pts[1], pts[2], pts[3]) == param_cross_ratio(s[0], s[1], s[2], s[3]));
  }
}

TEST_CASE("harmonic conjugate") {
  ProjPoint a = make_point(F, {1, 0}), b = make_point(F, {0, 1}), c = make_point(F, {1, 1});
  ProjPoint d = harmonic_conjugate(F, a, b, c);
  CHECK(d == make_point(F, {1, F.neg(1)}));
  CHECK(cross_ratio(F, a, b, c, d) == F.neg(1));
  CHECK(harmonic_conjugate(F, a, b, d) == c);
}

TEST_CASE("segre embedding lands on the quadric x0 x3 = x1 x2") {
  Rng rng = make_rng(5, 6);
  for (int t = 0; t < 20; ++t) {
    ProjPoint s = segre(F, random_point(F, 1, rng), random_point(F, 1, rng));
    CHECK(F.mul(s.c[0], s.c[3]) == F.mul(s.c[1], s.c[2]));
  }
}

TEST_CASE("projection from a point") {
  Rng rng = make_rng(7, 8);
  ProjPoint p = random_point(F, 3, rng), a = random_point(F, 3, rng), b = random_point(F, 3, rng);
  std::vector<ProjPoint> img = project_from(F, p, {a, b});
  REQUIRE(img.size() == 2);
  CHECK(img[0].ambient_dim() == 2);
  // Points on a line through the centre collapse.
  ProjPoint on = random_point_on(F, span_flat(F, {p, a}), rng);
  CHECK(project_point(F, p, on) == img[0]);
  // Collinear points stay collinear.
  ProjPoint m = random_point_on(F, span_flat(F, {a, b}), rng);
  CHECK(span_dim(F, {img[0], img[1], project_point(F, p, m)}) == 1);
}

TEST_CASE("salted streams differ") {
  Rng x = make_rng(1, 1), y = make_rng(1, 2), z = make_rng(1, 1);
  u64 a = x(), b = y(), c = z();
  CHECK(a != b);
  CHECK(a == c);
}
