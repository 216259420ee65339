#include "geproci/geproci.hpp"

#include <nlohmann/json.hpp>
#include <unordered_set>

namespace gp {

using json = nlohmann::ordered_json;

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Degenerate: return "degenerate";
  }
  return "?";
}

std::string grid_kind_name(GridResult::Kind k) {
  switch (k) {
    case GridResult::Kind::Grid: return "Grid";
    case GridResult::Kind::HalfGrid: return "HalfGrid";
    case GridResult::Kind::Neither: return "Neither";
  }
  return "?";
}

std::string decision_json(const Decision& d) {
  json j;
  j["verdict"] = verdict_name(d.verdict);
  j["prime"] = d.prime;
  j["seed"] = d.seed;
  j["trials"] = d.trials;
  json data;
  data["reason"] = d.reason;
  json w = json::array();
  for (const auto& t : d.witness) w.push_back({{"vertex", t.vertex}, {"dims", t.dims}, {"status", t.status}});
  data["witness"] = w;
  for (const auto& [k, v] : d.data) data[k] = v;
  j["data"] = data;
  return j.dump();
}

namespace {

struct Projection {
  ProjPoint vertex;
  std::vector<ProjPoint> image;
};

Projection sample_projection(const Fp& f, const std::vector<ProjPoint>& z, Rng& rng) {
  int n = z.at(0).ambient_dim();
  for (int attempt = 0; attempt < 50; ++attempt) {
    ProjPoint p = random_point(f, n, rng);
    try {
      return {p, project_from(f, p, z)};
    } catch (const Error& e) {
      if (e.kind() != "VertexInZ" && e.kind() != "CollisionDetected") throw;
    }
  }
  throw Error("ResampleExhausted", "no admissible vertex found");
}

Vec random_combination(const Fp& f, const std::vector<Vec>& basis, Rng& rng) {
  Vec v(basis[0].size(), 0);
  for (const auto& b : basis) {
    u64 s = random_elem(f, rng);
    for (size_t i = 0; i < v.size(); ++i) v[i] = f.add(v[i], f.mul(s, b[i]));
  }
  return v;
}

Verdict aggregate(const std::vector<Verdict>& vs) {
  bool all_yes = true;
  for (auto v : vs) {
    if (v == Verdict::No) return Verdict::No;
    all_yes = all_yes && v == Verdict::Yes;
  }
  return all_yes ? Verdict::Yes : Verdict::Inconclusive;
}

}  // namespace

Decision is_geproci(const Configuration& z, int a, int b, int trials, u64 seed) {
  if (a > b) std::swap(a, b);
  if (static_cast<int>(z.size()) != a * b)
    throw Error("WrongCardinality", std::to_string(z.size()) + " points, expected " + std::to_string(a * b));
  if (z.ambient_dim != 3) throw Error("WrongAmbient", "geproci check needs points of P^3");
  Decision d;
  d.prime = z.field.prime;
  d.seed = seed;
  d.trials = trials;
  Fp f = z.fp();
  if (span_dim(f, z.points) < 3) {
    d.verdict = Verdict::Degenerate;
    d.reason = "points span a proper subspace";
    return d;
  }
  Rng rng = make_rng(seed, 0x5a1700c9);
  std::vector<Verdict> vs;
  const int need_a = a == b ? 2 : 1;
  const int need_b = a == b ? 2 : static_cast<int>(binom(b - a + 2, 2)) + 1;
  for (int t = 0; t < trials; ++t) {
    Projection pr = sample_projection(f, z.points, rng);
    TrialWitness w;
    w.vertex = pr.vertex.c;
    auto ka = ideal_basis(f, pr.image, a);
    auto kb = a == b ? ka : ideal_basis(f, pr.image, b);
    w.dims = {static_cast<int>(ka.size()), static_cast<int>(kb.size())};
    Verdict v = Verdict::Inconclusive;
    if (static_cast<int>(ka.size()) < need_a) {
      v = Verdict::No;
      w.status = "degree " + std::to_string(a) + " piece too small";
    } else if (static_cast<int>(kb.size()) < need_b) {
      v = Verdict::No;
      w.status = "degree " + std::to_string(b) + " piece too small";
    } else if (static_cast<int>(ka.size()) > need_a || static_cast<int>(kb.size()) > need_b) {
      w.status = "unexpectedly large ideal";
    } else {
      std::vector<std::pair<Vec, Vec>> pairs;
      if (a == b) {
        pairs.emplace_back(ka[0], ka[1]);
        for (int k = 0; k < 4; ++k) pairs.emplace_back(random_combination(f, ka, rng), random_combination(f, ka, rng));
      } else {
        const Vec& F = ka[0];
        MonomialBasis ma(3, a), mb(3, b), me(3, b - a);
        Matrix span(0, mb.size());
        for (size_t j = 0; j < me.size(); ++j) span.append_row(mul_monomial(f, ma, mb, F, me.exps(j)));
        size_t r0 = rank(f, span);
        for (const auto& g : kb) {
          Matrix s2 = span;
          s2.append_row(g);
          if (rank(f, s2) > r0) pairs.emplace_back(F, g);
          if (pairs.size() == 5) break;
        }
      }
      w.status = "no coprime pair";
      for (const auto& [F, G] : pairs) {
        if (coprime_plane_curves(f, F, a, G, b, rng)) {
          v = Verdict::Yes;
          w.status = "certified";
          break;
        }
      }
    }
    vs.push_back(v);
    d.witness.push_back(w);
    if (v == Verdict::No) break;
  }
  d.verdict = aggregate(vs);
  d.reason = d.verdict == Verdict::Yes  ? "complete intersection certified at every sampled vertex"
             : d.verdict == Verdict::No ? "dimension obstruction at a random vertex"
                                        : "some trial could not be certified";
  return d;
}

namespace {

void exact_covers(const std::vector<std::vector<size_t>>& cands, size_t n, std::vector<bool>& covered,
                  std::vector<size_t>& chosen, std::vector<std::vector<size_t>>& out, size_t cap,
                  const std::vector<std::vector<size_t>>& through) {
  if (out.size() >= cap) return;
  size_t first = 0;
  while (first < n && covered[first]) ++first;
  if (first == n) {
    out.push_back(chosen);
    return;
  }
  for (size_t li : through[first]) {
    bool ok = true;
    for (size_t p : cands[li]) ok = ok && !covered[p];
    if (!ok) continue;
    for (size_t p : cands[li]) covered[p] = true;
    chosen.push_back(li);
    exact_covers(cands, n, covered, chosen, out, cap, through);
    chosen.pop_back();
    for (size_t p : cands[li]) covered[p] = false;
  }
}

std::vector<std::vector<size_t>> partitions(const std::vector<FlatSet>& lines, size_t n, size_t k, size_t cap,
                                            std::vector<std::vector<size_t>>& cands) {
  cands.clear();
  for (const auto& l : lines)
    if (l.pts.size() == k) cands.push_back(l.pts);
  std::vector<std::vector<size_t>> through(n);
  for (size_t i = 0; i < cands.size(); ++i)
    for (size_t p : cands[i]) through[p].push_back(i);
  std::vector<bool> covered(n, false);
  std::vector<size_t> chosen;
  std::vector<std::vector<size_t>> out;
  exact_covers(cands, n, covered, chosen, out, cap, through);
  return out;
}

}  // namespace

GridResult detect_grid(const Configuration& z, int a, int b) {
  if (a > b) std::swap(a, b);
  GridResult res;
  res.a = a;
  res.b = b;
  if (static_cast<int>(z.size()) != a * b || a < 2) return res;
  auto lines = maximal_lines(z.fp(), z.points);
  const size_t cap = 2000;
  std::vector<std::vector<size_t>> ca, cb;
  auto pa = partitions(lines, z.size(), static_cast<size_t>(b), cap, ca);  // a lines of b points
  auto pb = partitions(lines, z.size(), static_cast<size_t>(a), cap, cb);  // b lines of a points
  for (const auto& x : pa)
    for (const auto& y : pb) {
      bool full = true;
      for (size_t i : x) {
        for (size_t j : y) {
          int common = 0;
          for (size_t p : ca[i])
            for (size_t q : cb[j]) common += p == q;
          if (common != 1) {
            full = false;
            break;
          }
        }
        if (!full) break;
      }
      if (full) {
        res.kind = GridResult::Kind::Grid;
        for (size_t i : x) res.family_a.push_back(ca[i]);
        for (size_t j : y) res.family_b.push_back(cb[j]);
        return res;
      }
    }
  if (!pa.empty() || !pb.empty()) {
    res.kind = GridResult::Kind::HalfGrid;
    if (!pa.empty())
      for (size_t i : pa[0]) res.family_a.push_back(ca[i]);
    else
      for (size_t j : pb[0]) res.family_b.push_back(cb[j]);
  }
  return res;
}

GridResult detect_grid(const Configuration& z) {
  if (z.tags.ab) return detect_grid(z, z.tags.ab->first, z.tags.ab->second);
  GridResult half;
  int n = static_cast<int>(z.size());
  for (int a = 3; a * a <= n; ++a) {
    if (n % a) continue;
    GridResult r = detect_grid(z, a, n / a);
    if (r.kind == GridResult::Kind::Grid) return r;
    if (r.kind == GridResult::Kind::HalfGrid && half.kind == GridResult::Kind::Neither) half = r;
  }
  return half;
}

Decision is_ci222_p4(const Configuration& z, int trials, u64 seed) {
  if (z.size() != 8) throw Error("WrongCardinality", "the (2,2,2) test needs 8 points");
  if (z.ambient_dim != 4) throw Error("WrongAmbient", "the (2,2,2) test needs points of P^4");
  Decision d;
  d.prime = z.field.prime;
  d.seed = seed;
  d.trials = trials;
  Fp f = z.fp();
  if (span_dim(f, z.points) < 4) {
    d.verdict = Verdict::Degenerate;
    d.reason = "points span a proper subspace";
    return d;
  }
  Rng rng = make_rng(seed, 0x5a1700ca);
  std::vector<Verdict> vs;
  for (int t = 0; t < trials; ++t) {
    Projection pr = sample_projection(f, z.points, rng);
    TrialWitness w;
    w.vertex = pr.vertex.c;
    int h1 = hilbert_function(f, pr.image, 1), h2 = hilbert_function(f, pr.image, 2),
        h3 = hilbert_function(f, pr.image, 3);
    w.dims = {h1, h2, h3, 10 - h2, 20 - h3};
    Verdict v = Verdict::Inconclusive;
    if (h2 > 7) {
      v = Verdict::No;
      w.status = "fewer than three quadrics through the projection";
    } else if (h1 != 4 || h2 != 7 || h3 != 8) {
      w.status = "special Hilbert function";
    } else if (!generated_to_next_degree(f, pr.image, 3, 2)) {
      w.status = "quadrics do not generate in degree 3";
    } else {
      v = Verdict::Yes;
      w.status = "certified";
    }
    vs.push_back(v);
    d.witness.push_back(w);
    if (v == Verdict::No) break;
  }
  d.verdict = aggregate(vs);
  d.reason = d.verdict == Verdict::Yes  ? "projection is a (2,2,2) complete intersection at every sampled vertex"
             : d.verdict == Verdict::No ? "Hilbert function obstruction at a random vertex"
                                        : "some trial could not be certified";
  return d;
}

bool cbp_points(const Fp& f, const std::vector<ProjPoint>& pts) {
  size_t n = pts.size();
  if (n < 2) return true;
  for (int t = 0; t <= static_cast<int>(n); ++t) {
    Matrix m = interp_matrix(f, pts, t);
    // A point lacks a degree-t separator iff it appears in a linear relation among the rows.
    auto rel = kernel_basis(f, transpose(m));
    if (rel.empty()) return true;
    size_t support = 0;
    for (size_t i = 0; i < n; ++i) {
      bool in = false;
      for (const auto& r : rel) in = in || r[i] != 0;
      support += in;
    }
    if (support != 0 && support != n) return false;
  }
  return true;
}

bool cbp_ambient(const Configuration& z) { return cbp_points(z.fp(), z.points); }

Decision geprocb(const Configuration& z, int trials, u64 seed) {
  Decision d;
  d.prime = z.field.prime;
  d.seed = seed;
  d.trials = trials;
  Fp f = z.fp();
  Rng rng = make_rng(seed, 0x5a1700cb);
  std::vector<Verdict> vs;
  for (int t = 0; t < trials; ++t) {
    Projection pr = sample_projection(f, z.points, rng);
    TrialWitness w;
    w.vertex = pr.vertex.c;
    w.dims = h_vector(f, pr.image);
    bool ok = cbp_points(f, pr.image);
    w.status = ok ? "certified" : "separator degrees differ";
    vs.push_back(ok ? Verdict::Yes : Verdict::No);
    d.witness.push_back(w);
    if (!ok) break;
  }
  d.verdict = aggregate(vs);
  d.reason = d.verdict == Verdict::Yes ? "projection has the Cayley-Bacharach property at every sampled vertex"
                                       : "projection fails the Cayley-Bacharach property at a random vertex";
  return d;
}

Decision remembers(const Configuration& w, const Configuration& z, int m, int trials, u64 seed, int probes) {
  if (w.field.prime != z.field.prime) throw Error("FieldMismatch", "W and Z must share a field");
  std::unordered_set<ProjPoint, ProjPointHash> zs(z.points.begin(), z.points.end());
  std::unordered_set<ProjPoint, ProjPointHash> ws(w.points.begin(), w.points.end());
  for (const auto& p : w.points)
    if (!zs.count(p)) throw Error("NotSubset", "W is not contained in Z");
  Decision d;
  d.prime = z.field.prime;
  d.seed = seed;
  d.trials = trials;
  Fp f = z.fp();
  Rng rng = make_rng(seed, 0x5a1700cc);
  std::vector<Verdict> vs;
  long probe_fail = 0, probe_total = 0;
  int nv = z.ambient_dim;
  MonomialBasis mb(nv, m);
  for (int t = 0; t < trials; ++t) {
    Projection pr = sample_projection(f, z.points, rng);
    std::vector<ProjPoint> pw;
    for (size_t i = 0; i < z.size(); ++i)
      if (ws.count(z.points[i])) pw.push_back(pr.image[i]);
    auto ker = ideal_basis(f, pw, m);
    TrialWitness tw;
    tw.vertex = pr.vertex.c;
    tw.dims = {static_cast<int>(ker.size())};
    auto separates = [&](const ProjPoint& x) {
      for (const auto& F : ker)
        if (eval_form(f, mb, F, x.c)) return true;
      return false;
    };
    Verdict v = Verdict::Yes;
    tw.status = "certified";
    for (size_t i = 0; i < z.size(); ++i) {
      if (ws.count(z.points[i])) continue;
      if (separates(pr.image[i])) {
        v = Verdict::No;
        tw.status = "a cone through W misses point " + std::to_string(i);
        break;
      }
    }
    if (t == 0) {
      for (int k = 0; k < probes; ++k) {
        ProjPoint q = random_point(f, z.ambient_dim, rng);
        if (zs.count(q) || q == pr.vertex) continue;
        ++probe_total;
        if (separates(project_point(f, pr.vertex, q))) ++probe_fail;
      }
    }
    vs.push_back(v);
    d.witness.push_back(tw);
    if (v == Verdict::No) break;
  }
  d.verdict = aggregate(vs);
  d.reason = d.verdict == Verdict::Yes ? "every cone through W contains Z at each sampled vertex"
                                       : "a cone through W misses a point of Z";
  d.data = {{"probes", probe_total}, {"probes_failing", probe_fail}};
  return d;
}

}  // namespace gp
