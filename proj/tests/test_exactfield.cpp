#include <doctest.h>

#include <random>

#include "geproci/exactfield.hpp"

using namespace gp;

namespace {

bool trial_division(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 slow_pow(const Fp& f, u64 a, u64 e) {
  u64 r = 1;
  for (u64 i = 0; i < e; ++i) r = f.mul(r, a);
  return r;
}

}  // namespace

TEST_CASE("primality agrees with trial division") {
  for (u64 n = 0; n < 5000; ++n) CHECK(is_prime(n) == trial_division(n));
  CHECK(is_prime(1073741827));
  CHECK_FALSE(is_prime(1073741825));
}

TEST_CASE("field operations over the default prime") {
  FieldSpec fs = make_field({});
  CHECK(fs.prime >= kDefaultMinBound);
  CHECK(trial_division(fs.prime));
  for (u64 n = kDefaultMinBound; n < fs.prime; ++n) CHECK_FALSE(trial_division(n));
  Fp f = fs.field();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    u64 a = rng() % f.p, b = rng() % f.p;
    if (a == 0) continue;
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.add(f.sub(b, a), a) == b);
    CHECK(f.add(a, f.neg(a)) == 0);
    CHECK(f.pow(a, 13) == slow_pow(f, a, 13));
    CHECK(f.mul(f.pow(a, -3), f.pow(a, 3)) == 1);
  }
  CHECK(f.from_int(-1) == f.p - 1);
  CHECK(f.to_signed(f.p - 5) == -5);
}

TEST_CASE("order constraints resolve to elements of exact order") {
  for (i64 n : {3, 4, 5, 7, 8, 10, 12}) {
    FieldSpec fs = make_field({Symbol{"u", Constraint::Order(n)}});
    CHECK((fs.prime - 1) % static_cast<u64>(n) == 0);
    Fp f = fs.field();
    u64 u = fs.resolved.at("u");
    CHECK(f.pow(u, n) == 1);
    for (i64 k = 1; k < n; ++k) CHECK(f.pow(u, k) != 1);
    CHECK(multiplicative_order(u, fs.prime) == static_cast<u64>(n));
  }
}

TEST_CASE("quadratic minimal polynomials resolve to roots") {
  FieldSpec fs = make_field({Symbol{"t", Constraint::MinPoly({-1, -1, 1})}});
  Fp f = fs.field();
  u64 t = fs.resolved.at("t");
  CHECK(f.mul(t, t) == f.add(t, 1));
  CHECK(eval_expr("t^2 - t - 1", fs) == 0);
  CHECK_THROWS_AS(Constraint::MinPoly({1, 0, 0, 1}), Error);
}

TEST_CASE("square roots") {
  u64 p = 1073741827;
  std::mt19937_64 rng(3);
  Fp f{p};
  for (int i = 0; i < 100; ++i) {
    u64 x = rng() % p;
    u64 s = sqrt_mod(f.mul(x, x), p);
    CHECK(f.mul(s, s) == f.mul(x, x));
  }
}

TEST_CASE("expression parser") {
  FieldSpec fs = make_field({Symbol{"q", Constraint::Order(3)}});
  Fp f = fs.field();
  CHECK(eval_expr("1 + q + q^2", fs) == 0);
  CHECK(eval_expr("-(2*3)/4", fs) == f.neg(f.div(6, 4)));
  CHECK(eval_expr("q^(-1)", fs) == f.pow(fs.resolved.at("q"), 2));
  CHECK(eval_expr("\xE2\x88\x92" "1", fs) == f.p - 1);
  CHECK_THROWS_AS(eval_expr("1/0", fs), Error);
  CHECK_THROWS_AS(eval_expr("w + 1", fs), Error);
  CHECK_THROWS_AS(eval_expr("(1 + 2", fs), Error);
}
