#include <doctest.h>

#include "geproci/ks.hpp"

using namespace gp;

namespace {

bool valid(const OrthoGraph& g, const std::vector<int>& v) {
  for (auto [i, j] : g.edges)
    if (v[i] && v[j]) return false;
  for (const auto& b : g.bases) {
    int s = 0;
    for (size_t i : b) s += v[i];
    if (s != 1) return false;
  }
  return true;
}

// Exhaustive count of truth assignments.
long count_assignments(const OrthoGraph& g) {
  long n = 0;
  for (u64 mask = 0; mask < (u64{1} << g.n); ++mask) {
    std::vector<int> v(g.n);
    for (size_t i = 0; i < g.n; ++i) v[i] = static_cast<int>((mask >> i) & 1);
    n += valid(g, v);
  }
  return n;
}

}  // namespace

TEST_CASE("orthogonality graph of small sets") {
  OrthoGraph g = ortho_graph(named("ks13"));
  CHECK(g.n == 13);
  CHECK(g.edges.size() == 24);
  CHECK(g.bases.size() == 4);
  CHECK(g.primes.first != g.primes.second);
  for (auto [i, j] : g.edges) CHECK(g.adj[i][j]);
  CHECK(ortho_graph(named("ks21")).bases.size() == 7);
  OrthoGraph p = ortho_graph(named("peres33"));
  CHECK(p.edges.size() == 72);
  CHECK(p.bases.size() == 16);
}

TEST_CASE("backtracker agrees with exhaustive enumeration") {
  for (const char* label : {"ks13", "ks21"}) {
    CAPTURE(label);
    OrthoGraph g = ortho_graph(named(label));
    long n = count_assignments(g);
    auto t = truth_assignment(g);
    CHECK(t.has_value() == (n > 0));
    if (t) CHECK(valid(g, *t));
  }
  CHECK(count_assignments(ortho_graph(named("ks13"))) == 24);
}

TEST_CASE("Kochen-Specker sets") {
  CHECK(is_ks_set(named("peres33")));
  CHECK(is_ks_set(named("penrose")));
  FieldSpec fs = make_field({});
  Fp f = fs.field();
  Configuration basis = from_points("basis", fs, {make_point(f, {1, 0, 0}), make_point(f, {0, 1, 0}), make_point(f, {0, 0, 1})});
  CHECK_FALSE(is_ks_set(basis));
}
