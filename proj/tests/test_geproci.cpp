#include <doctest.h>

#include <nlohmann/json.hpp>

#include "geproci/geproci.hpp"

using namespace gp;

namespace {

template <class Fn>
std::string error_kind(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

Configuration random_config(int n, int k, u64 seed) {
  FieldSpec fs = make_field({});
  Rng rng = make_rng(seed, 99);
  std::vector<ProjPoint> pts;
  for (int i = 0; i < k; ++i) pts.push_back(random_point(fs.field(), n, rng));
  return from_points("random", fs, pts);
}

}  // namespace

TEST_CASE("geproci certificates and refusals") {
  CHECK(is_geproci(named("d4"), 3, 4).verdict == Verdict::Yes);
  CHECK(is_geproci(roots_grid(3, 4), 3, 4).verdict == Verdict::Yes);
  CHECK(is_geproci(random_config(3, 12, 1), 3, 4).verdict == Verdict::No);
  CHECK(is_geproci(random_config(3, 9, 2), 3, 3).verdict == Verdict::No);
  CHECK(error_kind([] { is_geproci(named("d4"), 3, 5); }) == "WrongCardinality");
  CHECK(error_kind([] { is_geproci(named("ks13"), 1, 13); }) == "WrongAmbient");
}

TEST_CASE("planar sets are degenerate") {
  FieldSpec fs = make_field({});
  Fp f = fs.field();
  std::vector<ProjPoint> pts;
  for (u64 i = 1; i <= 4; ++i)
    for (u64 j = 1; j <= 3; ++j) pts.push_back(make_point(f, {1, i, j, 0}));
  CHECK(is_geproci(from_points("planar", fs, pts), 3, 4).verdict == Verdict::Degenerate);
}

TEST_CASE("decision payload shape and determinism") {
  Decision d = is_geproci(named("d4"), 3, 4, 3, 5);
  auto j = nlohmann::json::parse(decision_json(d));
  CHECK(j["verdict"] == "yes");
  CHECK(j["prime"] == d.prime);
  CHECK(j["seed"] == 5);
  CHECK(j["trials"] == 3);
  CHECK(j["data"]["witness"].size() == 3);
  CHECK(decision_json(is_geproci(named("d4"), 3, 4, 3, 5)) == decision_json(d));
}

TEST_CASE("grid detection") {
  GridResult g = detect_grid(roots_grid(3, 4), 3, 4);
  REQUIRE(g.kind == GridResult::Kind::Grid);
  CHECK(g.family_a.size() == 3);
  CHECK(g.family_b.size() == 4);
  for (const auto& l : g.family_a) CHECK(l.size() == 4);
  for (const auto& l : g.family_b) CHECK(l.size() == 3);
  CHECK(detect_grid(named("d4")).kind == GridResult::Kind::HalfGrid);
  CHECK(detect_grid(random_config(3, 12, 3), 3, 4).kind == GridResult::Kind::Neither);
}

TEST_CASE("no (2,2,2) complete intersections among 8 points of P^4") {
  for (u64 s = 1; s <= 5; ++s) CHECK(is_ci222_p4(random_config(4, 8, s)).verdict == Verdict::No);
  CHECK(error_kind([] { is_ci222_p4(random_config(4, 7, 1)); }) == "WrongCardinality");
  CHECK(error_kind([] { is_ci222_p4(random_config(3, 8, 1)); }) == "WrongAmbient");
}

TEST_CASE("Cayley-Bacharach property") {
  FieldSpec fs = make_field({});
  Fp f = fs.field();
  // Nine points cut by two triples of lines: a complete intersection of two cubics.
  std::vector<ProjPoint> ci;
  for (u64 i = 1; i <= 3; ++i)
    for (u64 j = 1; j <= 3; ++j) ci.push_back(make_point(f, {1, i, j}));
  CHECK(cbp_points(f, ci));
  ci.push_back(make_point(f, {1, 7, 11}));
  CHECK_FALSE(cbp_points(f, ci));
  CHECK(geprocb(named("d4")).verdict == Verdict::Yes);
}

TEST_CASE("memory") {
  Configuration f4 = std_construction(4, StdWhich::Y1Y2);
  std::vector<size_t> half(12);
  for (size_t i = 0; i < 12; ++i) half[i] = i;
  Decision small = remembers(subset(f4, half, "first12"), f4, 4);
  CHECK(small.verdict == Verdict::No);
  Configuration d4 = with_prime(named("d4"), f4.field.prime);
  CHECK(error_kind([&] { remembers(d4, f4, 4); }) == "NotSubset");
  Configuration plain = named("f4");
  CHECK(error_kind([&] { remembers(with_prime(plain, 1000003), plain, 4); }) == "FieldMismatch");
}
