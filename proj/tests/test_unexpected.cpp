#include <doctest.h>

#include "geproci/unexpected.hpp"

using namespace gp;

namespace {

long b(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("projection shortcut agrees with derivative rows") {
  for (const char* label : {"d4", "d4_grid", "grid23"})
    for (int t = 1; t <= 4; ++t) {
      CAPTURE(label);
      CAPTURE(t);
      Configuration z = named(label);
      CHECK(adim(z, t, t, 3, 4) == adim_direct(z, t, t, 3, 4));
    }
  Configuration f4 = named("f4");
  CHECK(adim(f4, 4, 4) == adim_direct(f4, 4, 4));
}

TEST_CASE("unexpected iff adim exceeds max(0, vdim)") {
  for (const char* label : {"d4", "f4", "grid23", "cube_grid", "half_penrose"})
    for (int t = 2; t <= 6; ++t) {
      UnexpReport u = c_predicate(named(label), t);
      CHECK(u.unexpected == (u.adim > std::max(0L, u.vdim)));
      CHECK(u.vdim == vdim(named(label), t, t));
    }
}

TEST_CASE("virtual dimension formula") {
  Configuration d4 = named("d4");
  for (int t = 1; t <= 6; ++t)
    for (int m = 1; m <= t; ++m) CHECK(vdim(d4, t, m) == ideal_dim(d4.fp(), d4.points, t) - b(m + 2, 3));
}

TEST_CASE("closed form for the codimension-2 skeleton") {
  for (int n = 2; n <= 5; ++n)
    for (int m = 1; m <= 20; ++m) {
      auto [idim, cone] = skeleton_dims(n, m);
      CHECK(idim >= 0);
      CHECK(cone >= 0);
      if (m < b(n + 1, 2))
        CHECK(cone == 0);
      else
        CHECK((skeleton_f(m, n) > 0) == (n >= 3));
    }
  for (int m = 3; m <= 20; ++m) CHECK(skeleton_f(m, 2) == 0);
  for (int m = 6; m <= 20; ++m) CHECK(skeleton_f(m, 3) == 7);
  for (int m = 10; m <= 20; ++m) CHECK(skeleton_f(m, 4) == 25L * m - 80);
}

TEST_CASE("skeleton closed forms match sampled dimensions") {
  Fp f{1073741827};
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 4}, {3, 6}, {3, 7}, {4, 10}}) {
    CAPTURE(n);
    CAPTURE(m);
    FlatUnion s = skeleton(f, n, 2);
    auto [idim, cone] = skeleton_dims(n, m);
    CHECK(flat_union_ideal_dim(f, s, m) == idim);
    CHECK(adim(f, s, m, m) == cone);
  }
}

TEST_CASE("line skeleton cubic cones") {
  Fp f{1073741827};
  for (int n = 4; n <= 7; ++n) CHECK(adim(f, skeleton(f, n, n - 1), 3, 3) == b(n + 1, 3) - b(n + 2, 2) + n + 1);
}

TEST_CASE("explicit skeleton form") {
  for (int n = 2; n <= 7; ++n) {
    CAPTURE(n);
    SkeletonTReport r = verify_skeleton_T(n, 3);
    CHECK(r.ok());
    CHECK(r.flats == b(n + 2, r.k));
  }
  CHECK_THROWS_AS(verify_skeleton_T(8), Error);
}
