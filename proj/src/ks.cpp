#include "geproci/ks.hpp"

#include <algorithm>
#include <functional>

namespace gp {

namespace {

u64 dot(const Fp& f, const Vec& a, const Vec& b) {
  u64 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

std::vector<Constraint> constraints_of(const FieldSpec& fs) {
  std::vector<Constraint> cs;
  for (const auto& s : fs.symbols) cs.push_back(s.constraint);
  return cs;
}

}  // namespace

OrthoGraph ortho_graph(const Configuration& x, u64 second_prime) {
  if (!second_prime) second_prime = choose_prime(constraints_of(x.field), x.field.prime + 1);
  Configuration y = with_prime(x, second_prime);
  Fp f1 = x.fp(), f2 = y.fp();
  OrthoGraph g;
  g.n = x.size();
  g.primes = {f1.p, f2.p};
  g.adj.assign(g.n, std::vector<bool>(g.n, false));
  for (size_t i = 0; i < g.n; ++i)
    for (size_t j = i + 1; j < g.n; ++j)
      if (dot(f1, x.points[i].c, x.points[j].c) == 0 && dot(f2, y.points[i].c, y.points[j].c) == 0) {
        g.edges.emplace_back(i, j);
        g.adj[i][j] = g.adj[j][i] = true;
      }
  const size_t size = static_cast<size_t>(x.ambient_dim) + 1;
  std::vector<size_t> clique;
  std::function<void(size_t)> grow = [&](size_t start) {
    if (clique.size() == size) {
      std::vector<ProjPoint> pts;
      for (size_t i : clique) pts.push_back(x.points[i]);
      if (span_dim(f1, pts) == static_cast<int>(size) - 1) g.bases.push_back(clique);
      return;
    }
    for (size_t v = start; v < g.n; ++v) {
      bool ok = true;
      for (size_t u : clique) ok = ok && g.adj[u][v];
      if (!ok) continue;
      clique.push_back(v);
      grow(v + 1);
      clique.pop_back();
    }
  };
  grow(0);
  return g;
}

std::optional<std::vector<int>> truth_assignment(const OrthoGraph& g) {
  std::vector<int> val(g.n, -1);
  std::vector<std::vector<size_t>> bases_of(g.n);
  for (size_t b = 0; b < g.bases.size(); ++b)
    for (size_t v : g.bases[b]) bases_of[v].push_back(b);

  // Sets v = 1 and zeroes its neighbours; records changes on the trail.
  std::function<bool(size_t, int, std::vector<size_t>&)> assign = [&](size_t v, int x,
                                                                      std::vector<size_t>& trail) -> bool {
    if (val[v] != -1) return val[v] == x;
    val[v] = x;
    trail.push_back(v);
    if (x == 1)
      for (size_t u = 0; u < g.n; ++u)
        if (g.adj[v][u] && !assign(u, 0, trail)) return false;
    for (size_t b : bases_of[v]) {
      int ones = 0;
      std::vector<size_t> open;
      for (size_t u : g.bases[b]) {
        if (val[u] == 1) ++ones;
        if (val[u] == -1) open.push_back(u);
      }
      if (ones > 1) return false;
      if (ones == 0 && open.empty()) return false;
      if (ones == 0 && open.size() == 1 && !assign(open[0], 1, trail)) return false;
      if (ones == 1)
        for (size_t u : open)
          if (!assign(u, 0, trail)) return false;
    }
    return true;
  };

  std::function<bool()> search = [&]() -> bool {
    long best = -1;
    size_t best_open = g.n + 1;
    for (size_t b = 0; b < g.bases.size(); ++b) {
      int ones = 0;
      size_t open = 0;
      for (size_t u : g.bases[b]) {
        ones += val[u] == 1;
        open += val[u] == -1;
      }
      if (ones == 0 && open < best_open) {
        best = static_cast<long>(b);
        best_open = open;
      }
    }
    if (best < 0) return true;
    for (size_t v : g.bases[static_cast<size_t>(best)]) {
      if (val[v] != -1) continue;
      std::vector<size_t> trail;
      if (assign(v, 1, trail) && search()) return true;
      for (size_t u : trail) val[u] = -1;
    }
    return false;
  };

  if (!search()) return std::nullopt;
  for (auto& x : val)
    if (x == -1) x = 0;
  return val;
}

bool is_ks_set(const Configuration& x) { return !truth_assignment(ortho_graph(x)).has_value(); }

}  // namespace gp
