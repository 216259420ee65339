#include <doctest.h>

#include "geproci/weddle.hpp"

using namespace gp;

namespace {

Configuration random_config(int n, int k, u64 seed) {
  FieldSpec fs = make_field({});
  Rng rng = make_rng(seed, 77);
  std::vector<ProjPoint> pts;
  for (int i = 0; i < k; ++i) pts.push_back(random_point(fs.field(), n, rng));
  return from_points("random", fs, pts);
}

template <class Fn>
std::string error_kind(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

}  // namespace

TEST_CASE("rank splits into the base rank plus the reduced block rank") {
  Rng rng = make_rng(5, 1);
  for (u64 s = 1; s <= 10; ++s) {
    int k = 3 + static_cast<int>(s % 6);
    int d = 2 + static_cast<int>(s % 2);
    Configuration z = random_config(3, k, s);
    WeddleContext ctx = weddle_context(z, d, s);
    Fp f = z.fp();
    for (int t = 0; t < 5; ++t) {
      ProjPoint q = t % 2 ? random_point(f, 3, rng) : random_point_on(f, span_flat(f, {z.points[0], z.points[1]}), rng);
      CHECK(static_cast<int>(rank(f, weddle_matrix(f, z.points, d, q))) ==
            ctx.alpha + static_cast<int>(rank(f, reduced_block(ctx, q))));
      CHECK(weddle_rank(ctx, q) == static_cast<int>(rank(f, weddle_matrix(f, z.points, d, q))));
    }
  }
}

TEST_CASE("interpolation and Macaulay dual matrices have equal rank") {
  Rng rng = make_rng(6, 1);
  for (u64 s = 1; s <= 30; ++s) {
    int k = 1 + static_cast<int>(rng() % 12), d = 1 + static_cast<int>(rng() % 4);
    Configuration z = random_config(3, k, 100 + s);
    Fp f = z.fp();
    ProjPoint q = random_point(f, 3, rng);
    CHECK(rank(f, weddle_matrix(f, z.points, d, q)) == rank(f, macaulay_matrix(f, z.points, d, q)));
  }
}

TEST_CASE("six general points: quartic surface containing the pair lines") {
  Configuration z = random_config(3, 6, 42);
  WeddleContext ctx = weddle_context(z, 2, 9);
  CHECK(ctx.stable);
  WeddleDegree w = weddle_degree(ctx, 9);
  CHECK_FALSE(w.identically_zero);
  CHECK(w.degree == 4);
  Fp f = z.fp();
  Rng rng = make_rng(8, 1);
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = i + 1; j < 6; ++j)
      CHECK(weddle_member(ctx, random_point_on(f, span_flat(f, {z.points[i], z.points[j]}), rng)));
  CHECK(error_kind([&] { weddle_member(ctx, z.points[0]); }) == "PointInZ");
}

TEST_CASE("non-square reduced block") {
  Configuration z = random_config(3, 7, 3);
  WeddleContext ctx = weddle_context(z, 2, 3);
  CHECK(error_kind([&] { weddle_degree(ctx); }) == "NotSquare");
}

TEST_CASE("reducible Weddle fixture") {
  Fp f{1073741827};
  Rng rng = make_rng(11, 1);
  for (int t = 0; t < 20; ++t) {
    u64 a = 1 + rng() % 1000, b = 1 + rng() % 1000, c = 1 + rng() % 1000;
    Vec q = random_point(f, 3, rng).c;
    u64 x = q[0], y = q[1], zz = q[2], w = q[3];
    u64 lin = f.add(f.add(f.mul(f.mul(b, c), x), f.mul(f.mul(a, c), y)), f.mul(f.mul(a, b), zz));
    lin = f.sub(lin, f.mul(2, f.mul(f.mul(a, b), f.mul(c, w))));
    u64 expect = f.mul(f.mul(2, f.mul(x, y)), f.mul(zz, lin));
    CHECK(det(f, reducible_weddle_matrix(f, a, b, c, q)) == expect);
  }
  ReducibleWeddleReport r = verify_reducible_weddle(3, 5, 7, 50, 2);
  CHECK(r.ok());
  CHECK(r.agreements == 50);
}
