#include "geproci/combinat.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace gp {

int IncidenceCensus::total() const {
  int s = 0;
  for (auto [k, v] : histogram) s += v;
  return s;
}

std::vector<FlatSet> maximal_lines(const Fp& f, const std::vector<ProjPoint>& pts) {
  size_t n = pts.size();
  std::vector<int> line_of(n * n, -1);
  std::vector<FlatSet> out;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (line_of[i * n + j] >= 0) continue;
      FlatSet fs;
      fs.flat = span_flat(f, {pts[i], pts[j]});
      for (size_t k = 0; k < n; ++k)
        if (k == i || k == j || flat_contains(f, fs.flat, pts[k])) fs.pts.push_back(k);
      int id = static_cast<int>(out.size());
      for (size_t a : fs.pts)
        for (size_t b : fs.pts) line_of[a * n + b] = id;
      out.push_back(std::move(fs));
    }
  return out;
}

std::vector<FlatSet> maximal_planes(const Fp& f, const std::vector<ProjPoint>& pts) {
  size_t n = pts.size();
  std::vector<char> done(n * n * n, 0);
  std::vector<FlatSet> out;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        if (done[(i * n + j) * n + k]) continue;
        Flat fl = span_flat(f, {pts[i], pts[j], pts[k]});
        if (fl.dim != 2) continue;
        FlatSet fs;
        fs.flat = fl;
        for (size_t m = 0; m < n; ++m)
          if (flat_contains(f, fl, pts[m])) fs.pts.push_back(m);
        const auto& q = fs.pts;
        for (size_t a = 0; a < q.size(); ++a)
          for (size_t b = a + 1; b < q.size(); ++b)
            for (size_t c = b + 1; c < q.size(); ++c) done[(q[a] * n + q[b]) * n + q[c]] = 1;
        out.push_back(std::move(fs));
      }
  return out;
}

IncidenceCensus census_of(const std::vector<FlatSet>& flats, int flat_dim) {
  IncidenceCensus c;
  c.flat_dim = flat_dim;
  for (const auto& fs : flats) ++c.histogram[static_cast<int>(fs.pts.size())];
  return c;
}

IncidenceCensus line_census(const Configuration& z) { return census_of(maximal_lines(z.fp(), z.points), 1); }

IncidenceCensus plane_census(const Configuration& z) { return census_of(maximal_planes(z.fp(), z.points), 2); }

std::vector<std::vector<int>> point_profiles(const std::vector<FlatSet>& lines, size_t npoints) {
  size_t mx = 2;
  for (const auto& l : lines) mx = std::max(mx, l.pts.size());
  std::vector<std::vector<int>> prof(npoints, std::vector<int>(mx - 1, 0));
  for (const auto& l : lines)
    for (size_t p : l.pts) ++prof[p][l.pts.size() - 2];
  return prof;
}

namespace {

// The common point of two coplanar distinct lines, if any.
std::optional<ProjPoint> intersect_lines(const Fp& f, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                                         const ProjPoint& d) {
  size_t n = a.c.size();
  Matrix m(n, 4);
  for (size_t i = 0; i < n; ++i) {
    m(i, 0) = a.c[i];
    m(i, 1) = b.c[i];
    m(i, 2) = f.neg(c.c[i]);
    m(i, 3) = f.neg(d.c[i]);
  }
  auto ker = kernel_basis(f, m);
  if (ker.size() != 1) return std::nullopt;
  Vec v(n);
  for (size_t i = 0; i < n; ++i) v[i] = f.add(f.mul(ker[0][0], a.c[i]), f.mul(ker[0][1], b.c[i]));
  return make_point(f, v);
}

}  // namespace

std::pair<std::vector<ProjPoint>, std::vector<ProjPoint>> brianchon_points(const Configuration& g) {
  Fp f = g.fp();
  auto lines = maximal_lines(f, g.points);
  std::vector<std::pair<size_t, size_t>> two;
  int three = 0;
  for (const auto& l : lines) {
    if (l.pts.size() == 2) two.emplace_back(l.pts[0], l.pts[1]);
    else if (l.pts.size() == 3) ++three;
    else throw Error("NotA33Grid", "unexpected line size");
  }
  if (g.size() != 9 || three != 6 || two.size() != 18) throw Error("NotA33Grid", "input is not a (3,3)-grid");
  std::unordered_map<ProjPoint, std::set<size_t>, ProjPointHash> through;
  for (size_t x = 0; x < two.size(); ++x)
    for (size_t y = x + 1; y < two.size(); ++y) {
      auto [a, b] = two[x];
      auto [c, d] = two[y];
      if (a == c || a == d || b == c || b == d) continue;
      auto q = intersect_lines(f, g.points[a], g.points[b], g.points[c], g.points[d]);
      if (!q) continue;
      through[*q].insert(x);
      through[*q].insert(y);
    }
  std::vector<ProjPoint> conc;
  for (const auto& [q, ls] : through)
    if (ls.size() >= 3) conc.push_back(q);
  std::sort(conc.begin(), conc.end());
  if (conc.size() != 6) throw Error("NotA33Grid", "expected six concurrency points, found " + std::to_string(conc.size()));
  for (size_t i = 1; i < 6; ++i)
    for (size_t j = i + 1; j < 6; ++j) {
      std::vector<ProjPoint> t1 = {conc[0], conc[i], conc[j]}, t2;
      for (size_t k = 1; k < 6; ++k)
        if (k != i && k != j) t2.push_back(conc[k]);
      if (span_dim(f, t1) == 1 && span_dim(f, t2) == 1) return {t1, t2};
    }
  throw Error("NotA33Grid", "concurrency points do not split into collinear triples");
}

namespace {

struct LineData {
  std::vector<FlatSet> lines;
  std::vector<int> line_of;  // n*n, id of the line through (i,j) if it has >= 3 points, else -1
  std::vector<std::vector<int>> profiles;
  size_t n = 0;
};

LineData line_data(const Configuration& z) {
  LineData d;
  d.n = z.size();
  d.lines = maximal_lines(z.fp(), z.points);
  d.line_of.assign(d.n * d.n, -1);
  for (size_t id = 0; id < d.lines.size(); ++id) {
    const auto& l = d.lines[id];
    if (l.pts.size() < 3) continue;
    for (size_t a : l.pts)
      for (size_t b : l.pts)
        if (a != b) d.line_of[a * d.n + b] = static_cast<int>(id);
  }
  d.profiles = point_profiles(d.lines, d.n);
  return d;
}

std::vector<int> pad(std::vector<int> v, size_t len) {
  v.resize(std::max(v.size(), len), 0);
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

bool valid_bijection(const LineData& a, const LineData& b, const std::vector<size_t>& f) {
  std::map<int, int> lm;
  for (size_t i = 0; i < a.n; ++i)
    for (size_t j = i + 1; j < a.n; ++j) {
      int l1 = a.line_of[i * a.n + j], l2 = b.line_of[f[i] * b.n + f[j]];
      if ((l1 < 0) != (l2 < 0)) return false;
      if (l1 < 0) continue;
      if (a.lines[l1].pts.size() != b.lines[l2].pts.size()) return false;
      auto [it, fresh] = lm.emplace(l1, l2);
      if (!fresh && it->second != l2) return false;
    }
  return true;
}

class Search {
 public:
  Search(const LineData& a, const LineData& b) : a_(a), b_(b), f_(a.n, SIZE_MAX), used_(b.n, false) {
    l2of_.assign(a.lines.size(), -1);
    l1of_.assign(b.lines.size(), -1);
  }

  bool run(std::vector<size_t>& out) {
    if (!extend(0)) return false;
    out = f_;
    return true;
  }

 private:
  const LineData& a_;
  const LineData& b_;
  std::vector<size_t> f_;
  std::vector<bool> used_;
  std::vector<int> l2of_, l1of_;

  bool extend(size_t i) {
    if (i == a_.n) return true;
    for (size_t x = 0; x < b_.n; ++x) {
      if (used_[x] || pad(a_.profiles[i], 0) != pad(b_.profiles[x], 0)) continue;
      std::vector<std::pair<int, int>> added;
      bool ok = true;
      for (size_t j = 0; j < i && ok; ++j) {
        int l1 = a_.line_of[i * a_.n + j], l2 = b_.line_of[x * b_.n + f_[j]];
        if ((l1 < 0) != (l2 < 0)) {
          ok = false;
          break;
        }
        if (l1 < 0) continue;
        if (a_.lines[l1].pts.size() != b_.lines[l2].pts.size()) ok = false;
        else if (l2of_[l1] == -1 && l1of_[l2] == -1) {
          l2of_[l1] = l2;
          l1of_[l2] = l1;
          added.emplace_back(l1, l2);
        } else if (l2of_[l1] != l2) {
          ok = false;
        }
      }
      if (ok) {
        f_[i] = x;
        used_[x] = true;
        if (extend(i + 1)) return true;
        used_[x] = false;
        f_[i] = SIZE_MAX;
      }
      for (auto [l1, l2] : added) {
        l2of_[l1] = -1;
        l1of_[l2] = -1;
      }
    }
    return false;
  }
};

}  // namespace

std::map<std::pair<std::vector<int>, std::vector<int>>, BipartiteProbe> bipartite_probes(const Configuration& z) {
  LineData d = line_data(z);
  size_t mx = 0;
  for (const auto& l : d.lines) mx = std::max(mx, l.pts.size());
  std::map<std::vector<int>, std::vector<size_t>> classes;
  for (size_t i = 0; i < d.n; ++i) classes[pad(d.profiles[i], 0)].push_back(i);
  std::vector<std::vector<bool>> two(d.n, std::vector<bool>(d.n, false));
  for (const auto& l : d.lines)
    if (l.pts.size() == 2) two[l.pts[0]][l.pts[1]] = two[l.pts[1]][l.pts[0]] = true;

  std::map<std::pair<std::vector<int>, std::vector<int>>, BipartiteProbe> out;
  for (const auto& [pu, us] : classes)
    for (const auto& [pv, vs] : classes) {
      if (pu == pv) continue;
      std::set<size_t> vset(vs.begin(), vs.end());
      std::vector<std::set<size_t>> nb(us.size());
      BipartiteProbe probe;
      for (size_t k = 0; k < us.size(); ++k) {
        for (size_t v : vs)
          if (two[us[k]][v]) nb[k].insert(v);
        probe.u_degrees.push_back(static_cast<int>(nb[k].size()));
      }
      std::sort(probe.u_degrees.begin(), probe.u_degrees.end());
      for (size_t x = 0; x < us.size(); ++x)
        for (size_t y = x + 1; y < us.size(); ++y)
          for (size_t w = y + 1; w < us.size(); ++w) {
            long c = 0;
            for (size_t v : nb[x])
              if (nb[y].count(v) && nb[w].count(v)) ++c;
            probe.k33 += c * (c - 1) * (c - 2) / 6;
          }
      for (const auto& l : d.lines) {
        if (l.pts.size() != mx) continue;
        bool inside = true;
        for (size_t p : l.pts) inside = inside && vset.count(p);
        if (!inside) continue;
        for (size_t x = 0; x < us.size(); ++x)
          for (size_t y = x + 1; y < us.size(); ++y) {
            int cx = 0, cy = 0, both = 0;
            for (size_t p : l.pts) {
              bool ix = nb[x].count(p), iy = nb[y].count(p);
              cx += ix;
              cy += iy;
              both += ix && iy;
            }
            if (cx >= 3 && cy >= 3 && both == 0) ++probe.disjoint_k13;
          }
      }
      out[{pu, pv}] = probe;
    }
  return out;
}

EquivResult weak_comb_equivalent(const Configuration& z1, const Configuration& z2, size_t exhaustive_bound) {
  if (z1.size() != z2.size()) throw Error("SizeMismatch", "configurations have different cardinalities");
  EquivResult res;
  LineData a = line_data(z1), b = line_data(z2);

  std::vector<size_t> ident(a.n);
  for (size_t i = 0; i < a.n; ++i) ident[i] = i;
  if (valid_bijection(a, b, ident)) {
    res.kind = EquivResult::Kind::Equivalent;
    res.bijection = ident;
    return res;
  }

  if (census_of(a.lines, 1).histogram != census_of(b.lines, 1).histogram) {
    res.kind = EquivResult::Kind::Distinguished;
    res.invariant = "line_census";
    return res;
  }
  std::multiset<std::vector<int>> pa, pb;
  for (size_t i = 0; i < a.n; ++i) {
    pa.insert(pad(a.profiles[i], 0));
    pb.insert(pad(b.profiles[i], 0));
  }
  if (pa != pb) {
    res.kind = EquivResult::Kind::Distinguished;
    res.invariant = "point_profiles";
    return res;
  }
  auto qa = bipartite_probes(z1), qb = bipartite_probes(z2);
  for (const auto& [key, pr] : qa) {
    const auto& other = qb.at(key);
    const char* name = nullptr;
    if (pr.u_degrees != other.u_degrees) name = "bipartite_degrees";
    else if (pr.k33 != other.k33) name = "bipartite_K33";
    else if (pr.disjoint_k13 != other.disjoint_k13) name = "bipartite_disjoint_K13";
    if (name) {
      res.kind = EquivResult::Kind::Distinguished;
      res.invariant = name;
      return res;
    }
  }
  if (a.n <= exhaustive_bound) {
    std::vector<size_t> f;
    if (Search(a, b).run(f)) {
      res.kind = EquivResult::Kind::Equivalent;
      res.bijection = f;
    } else {
      res.kind = EquivResult::Kind::Distinguished;
      res.invariant = "exhaustive_search";
    }
    return res;
  }
  return res;
}

}  // namespace gp
