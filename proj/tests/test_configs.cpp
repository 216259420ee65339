#include <doctest.h>

#include <cstdio>
#include <map>

#include "geproci/combinat.hpp"
#include "geproci/configs.hpp"

using namespace gp;

TEST_CASE("named configurations have the expected sizes and ambient spaces") {
  const std::map<std::string, std::pair<size_t, int>> want = {
      {"d4", {12, 3}},       {"d4_grid", {9, 3}},   {"cube_grid", {9, 3}}, {"f4", {24, 3}},
      {"klein", {60, 3}},    {"penrose", {40, 3}},  {"half_penrose", {20, 3}}, {"h4", {60, 3}},
      {"d4_matrix", {12, 3}}, {"f4_matrix", {24, 3}}, {"h4_matrix", {60, 3}}, {"cell120", {120, 3}},
      {"rays300", {300, 3}}, {"z1", {30, 3}},       {"z2", {30, 3}},       {"z3", {30, 3}},
      {"grid23", {6, 3}},    {"e7", {63, 6}},       {"e8", {120, 7}},      {"ks13", {13, 2}},
      {"ks21", {21, 2}},     {"peres33", {33, 2}}};
  for (const auto& [label, sz] : want) {
    CAPTURE(label);
    Configuration z = named(label);
    CHECK(z.size() == sz.first);
    CHECK(z.ambient_dim == sz.second);
    // Points are distinct.
    std::vector<ProjPoint> pts = z.points;
    std::sort(pts.begin(), pts.end());
    CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
  }
  CHECK_THROWS_AS(named("no_such_set"), Error);
}

TEST_CASE("matrix-generated sets have the same line census as the explicit lists") {
  CHECK(line_census(named("d4_matrix")).histogram == line_census(named("d4")).histogram);
  CHECK(line_census(named("f4_matrix")).histogram == line_census(named("f4")).histogram);
  CHECK(line_census(named("h4_matrix")).histogram == line_census(named("h4")).histogram);
}

TEST_CASE("standard construction sizes") {
  for (int n = 3; n <= 6; ++n) {
    CHECK(std_construction(n, StdWhich::Y1).size() == static_cast<size_t>(n * (n + 1)));
    CHECK(std_construction(n, StdWhich::Y2).size() == static_cast<size_t>(n * (n + 1)));
  }
  CHECK(std_construction(4, StdWhich::Y1Y2).size() == 24);
  CHECK(std_construction(6, StdWhich::Y1Y2).size() == 48);
  CHECK(extend_standard(std_construction(3, StdWhich::Y1)).size() == 16);
  CHECK(extend_standard(std_construction(4, StdWhich::Y1Y2)).size() == 36);
  // The first 36 points of Klein are the extended F4-type set.
  Configuration k = named("klein");
  Configuration e = extend_standard(std_construction(4, StdWhich::Y1Y2));
  std::vector<ProjPoint> a(k.points.begin(), k.points.begin() + 36), b = e.points;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
}

TEST_CASE("grids lie on the quadric x0 x3 = x1 x2") {
  Configuration g = grid(3, 4, {{"1", "0"}, {"0", "1"}, {"1", "1"}}, {{"1", "2"}, {"1", "3"}, {"1", "4"}, {"1", "5"}});
  CHECK(g.size() == 12);
  Fp f = g.fp();
  for (const auto& p : g.points) CHECK(f.mul(p.c[0], p.c[3]) == f.mul(p.c[1], p.c[2]));
  Configuration r = roots_grid(4, 6);
  CHECK(r.size() == 24);
  CHECK((r.field.prime - 1) % 6 == 0);
}

TEST_CASE("removing rows of the standard grid") {
  Configuration s6 = std_construction(6, StdWhich::Y1);
  Fp f = s6.fp();
  std::vector<Flat> rows;
  for (int r = 0; r < 3; ++r) {
    std::vector<ProjPoint> pts(s6.points.begin() + r * 6, s6.points.begin() + r * 6 + 6);
    CHECK(span_dim(f, pts) == 1);
    rows.push_back(span_flat(f, pts));
  }
  CHECK(remove_lines(s6, {rows[0], rows[1]}).size() == 30);
  CHECK(remove_lines(s6, rows).size() == 24);
}

TEST_CASE("json round trip and prime changes") {
  for (const char* label : {"d4", "penrose", "ks21"}) {
    Configuration z = named(label);
    CHECK(from_json(to_json(z)) == z);
  }
  Configuration d4 = named("d4");
  Configuration other = with_prime(d4, 1000003);
  CHECK(other.field.prime == 1000003);
  CHECK(line_census(other).histogram == line_census(d4).histogram);
  CHECK_THROWS_AS(from_json("{\"label\": 3"), Error);
  std::string path = "configs_roundtrip.json";
  save(named("klein"), path);
  CHECK(load(path) == named("klein"));
  std::remove(path.c_str());
  CHECK_THROWS_AS(load("does/not/exist.json"), Error);
}

TEST_CASE("coordinate skeletons") {
  Fp f{1073741827};
  for (int n = 3; n <= 6; ++n) {
    FlatUnion lines = skeleton(f, n, n - 1);
    CHECK(lines.flats.size() == static_cast<size_t>(n * (n + 1) / 2));
    for (const auto& fl : lines.flats) CHECK(fl.dim == 1);
    FlatUnion cod2 = skeleton(f, n, 2);
    for (const auto& fl : cod2.flats) CHECK(fl.dim == n - 2);
  }
}
