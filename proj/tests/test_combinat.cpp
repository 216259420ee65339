#include <doctest.h>

#include <algorithm>

#include "geproci/combinat.hpp"

using namespace gp;

namespace {

long c2(long k) { return k * (k - 1) / 2; }
long c3(long k) { return k * (k - 1) * (k - 2) / 6; }

// Collinear triples by brute force.
long collinear_triples(const Configuration& z) {
  Fp f = z.fp();
  long n = 0;
  for (size_t i = 0; i < z.size(); ++i)
    for (size_t j = i + 1; j < z.size(); ++j)
      for (size_t k = j + 1; k < z.size(); ++k) n += span_dim(f, {z.points[i], z.points[j], z.points[k]}) == 1;
  return n;
}

}  // namespace

TEST_CASE("line censuses satisfy the pair and triple identities") {
  for (const char* label : {"d4", "f4", "cube_grid", "half_penrose", "penrose", "z1", "klein"}) {
    CAPTURE(label);
    Configuration z = named(label);
    IncidenceCensus c = line_census(z);
    long pairs = 0, triples = 0;
    for (auto [k, v] : c.histogram) {
      pairs += c2(k) * v;
      triples += c3(k) * v;
    }
    CHECK(pairs == c2(static_cast<long>(z.size())));
    if (z.size() <= 40) CHECK(triples == collinear_triples(z));
  }
}

TEST_CASE("computed censuses") {
  CHECK(line_census(named("d4")).histogram == std::map<int, int>{{2, 18}, {3, 16}});
  // The 24-point set has 72 two-point lines; 60 would violate the pair identity.
  CHECK(line_census(named("f4")).histogram == std::map<int, int>{{2, 72}, {3, 32}, {4, 18}});
  CHECK(line_census(named("penrose")).histogram == std::map<int, int>{{2, 240}, {4, 90}});
  CHECK(line_census(named("klein")).histogram == std::map<int, int>{{2, 360}, {3, 320}, {6, 30}});
  CHECK(plane_census(named("d4")).histogram.at(6) == 12);
}

TEST_CASE("point profiles count incidences") {
  Configuration z = named("f4");
  auto lines = maximal_lines(z.fp(), z.points);
  auto prof = point_profiles(lines, z.size());
  REQUIRE(prof.size() == z.size());
  IncidenceCensus c = census_of(lines, 1);
  for (auto [k, v] : c.histogram) {
    long inc = 0;
    for (const auto& p : prof) inc += p[static_cast<size_t>(k - 2)];
    CHECK(inc == static_cast<long>(k) * v);
  }
}

TEST_CASE("a relabelled copy is equivalent and the bijection preserves lines") {
  Configuration z = named("d4");
  std::vector<size_t> perm(z.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = (i * 5 + 3) % z.size();
  Configuration w = subset(z, perm, "d4_perm");
  EquivResult e = weak_comb_equivalent(z, w);
  REQUIRE(e.kind == EquivResult::Kind::Equivalent);
  Fp f = z.fp();
  for (const auto& l : maximal_lines(f, z.points)) {
    std::vector<ProjPoint> img;
    for (size_t i : l.pts) img.push_back(w.points[e.bijection[i]]);
    CHECK(span_dim(f, img) == 1);
  }
  CHECK_THROWS_AS(weak_comb_equivalent(z, named("f4")), Error);
}

TEST_CASE("different line censuses are distinguished") {
  Configuration g = roots_grid(3, 4);
  Configuration z = with_prime(named("d4"), g.field.prime);
  EquivResult e = weak_comb_equivalent(z, g);
  CHECK(e.kind == EquivResult::Kind::Distinguished);
  CHECK(e.invariant == "line_census");
}

TEST_CASE("concurrency points of a (3,3)-grid") {
  Configuration g = named("cube_grid");
  auto [t1, t2] = brianchon_points(g);
  CHECK(t1.size() == 3);
  CHECK(t2.size() == 3);
  CHECK(span_dim(g.fp(), t1) == 1);
  CHECK(span_dim(g.fp(), t2) == 1);
  CHECK_THROWS_AS(brianchon_points(named("d4")), Error);
}
