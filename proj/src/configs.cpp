#include "geproci/configs.hpp"

#include <boost/rational.hpp>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace gp {

using json = nlohmann::ordered_json;

namespace {

std::vector<Symbol> order_symbol(const std::string& name, int n) { return {Symbol{name, Constraint::Order(n)}}; }

bool simple_expr(const std::string& s) {
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '*' || c == '/' || (c == '-' && i > 0))) return false;
  }
  return s.empty() || s[0] != '-';
}

std::string wrap(const std::string& s) { return simple_expr(s) ? s : "(" + s + ")"; }

std::string mul_expr(const std::string& a, const std::string& b) {
  if (a == "0" || b == "0") return "0";
  if (a == "1") return b;
  if (b == "1") return a;
  if (a == "-1") return "-" + wrap(b);
  if (b == "-1") return "-" + wrap(a);
  return wrap(a) + "*" + wrap(b);
}

std::string upow(const std::string& u, int e) {
  if (e == 0) return "1";
  if (e == 1) return u;
  return u + "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
}

std::string neg_expr(const std::string& a) {
  if (a == "0") return "0";
  if (!a.empty() && a[0] == '-' && simple_expr(a.substr(1))) return a.substr(1);
  return "-" + wrap(a);
}

ExprPoint segre_expr(const P1Param& x, const P1Param& y) {
  return {mul_expr(x.a, y.a), mul_expr(x.a, y.b), mul_expr(x.b, y.a), mul_expr(x.b, y.b)};
}

std::vector<ExprPoint> parse_rows(const std::vector<std::string>& rows) {
  // Rows like "1*00": digits, '*' standing for -1.
  std::vector<ExprPoint> out;
  for (const auto& r : rows) {
    ExprPoint p;
    for (char c : r) p.push_back(c == '*' ? "-1" : std::string(1, c));
    out.push_back(p);
  }
  return out;
}

// Exact a + b*phi with phi^2 = phi + 1.
using Rat = boost::rational<i64>;
struct QPhi {
  Rat a, b;
};
QPhi operator+(QPhi x, QPhi y) { return {x.a + y.a, x.b + y.b}; }
QPhi operator*(QPhi x, QPhi y) { return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b}; }

std::string rat_str(Rat r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

std::string qphi_str(const QPhi& q) {
  if (q.b == Rat(0)) return rat_str(q.a);
  std::string bs = q.b == Rat(1) ? "phi" : q.b == Rat(-1) ? "-phi" : rat_str(q.b) + "*phi";
  if (q.a == Rat(0)) return bs;
  return rat_str(q.a) + (bs[0] == '-' ? "" : "+") + bs;
}

using QMat = std::array<std::array<QPhi, 4>, 4>;

QMat qmul(const QMat& x, const QMat& y) {
  QMat r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      QPhi s{0, 0};
      for (int k = 0; k < 4; ++k) s = s + x[i][k] * y[k][j];
      r[i][j] = s;
    }
  return r;
}

QMat qident() {
  QMat r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = {Rat(i == j ? 1 : 0), Rat(0)};
  return r;
}

QMat qpow(const QMat& m, int k) {
  QMat r = qident();
  for (int i = 0; i < k; ++i) r = qmul(r, m);
  return r;
}

const QPhi kPhi{0, 1};
const QPhi kInvPhi{-1, 1};  // 1/phi = phi - 1

QPhi q(i64 n) { return {Rat(n), Rat(0)}; }
QPhi qn(QPhi x) { return {-x.a, -x.b}; }
QPhi half(QPhi x) { return {x.a / 2, x.b / 2}; }

QMat mat_u() {
  int m[4][4] = {{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {1, -1, -1, -1}};
  QMat r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = half(q(m[i][j]));
  return r;
}

QMat mat_v() {
  QMat r = {{{kPhi, q(0), q(-1), kInvPhi},
             {q(0), kPhi, qn(kInvPhi), q(-1)},
             {q(1), kInvPhi, kPhi, q(0)},
             {qn(kInvPhi), q(1), q(0), kPhi}}};
  for (auto& row : r)
    for (auto& x : row) x = half(x);
  return r;
}

QMat mat_w() {
  QMat r = {{{kInvPhi, qn(kPhi), q(0), q(1)},
             {kPhi, kInvPhi, q(1), q(0)},
             {q(0), q(-1), kInvPhi, qn(kPhi)},
             {q(-1), q(0), kPhi, kInvPhi}}};
  for (auto& row : r)
    for (auto& x : row) x = half(x);
  return r;
}

// sqrt(2) * T, which has integer entries; the scalar does not matter projectively.
QMat mat_t_scaled() {
  int m[4][4] = {{1, -1, 0, 0}, {-1, -1, 0, 0}, {0, 0, -1, -1}, {0, 0, -1, 1}};
  QMat r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = q(m[i][j]);
  return r;
}

Configuration columns_config(const std::string& label, const std::vector<QMat>& mats, ConfigTags tags, u64 prime) {
  std::vector<Symbol> syms = {Symbol{"phi", Constraint::MinPoly({-1, -1, 1})}};
  FieldSpec fs = make_field(syms, prime);
  Fp f = fs.field();
  std::vector<ExprPoint> exprs;
  std::unordered_set<ProjPoint, ProjPointHash> seen;
  for (const auto& m : mats) {
    for (int c = 0; c < 4; ++c) {
      ExprPoint e;
      Vec v;
      for (int r = 0; r < 4; ++r) {
        e.push_back(qphi_str(m[r][c]));
        v.push_back(eval_expr(e.back(), fs));
      }
      if (seen.insert(make_point(f, v)).second) exprs.push_back(e);
    }
  }
  return realize(label, 3, syms, exprs, tags, fs.prime);
}

std::vector<ExprPoint> std_grid_exprs(int n, const std::vector<int>& rows) {
  std::vector<ExprPoint> out;
  for (int i : rows)
    for (int j = 0; j < n; ++j) out.push_back(segre_expr({"1", upow("u", i)}, {"1", upow("u", j)}));
  return out;
}

std::vector<ExprPoint> y1_exprs(int n) {
  std::vector<ExprPoint> out;
  for (int i = 0; i < n; ++i) out.push_back({"1", "0", "0", neg_expr(upow("u", i))});
  return out;
}

std::vector<ExprPoint> y2_exprs(int n) {
  std::vector<ExprPoint> out;
  for (int i = 0; i < n; ++i) out.push_back({"0", "1", neg_expr(upow("u", i)), "0"});
  return out;
}

std::vector<int> range(int n) {
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = i;
  return r;
}

Configuration klein(u64 prime) {
  Configuration zt = extend_standard(std_construction(4, StdWhich::Y1Y2, prime));
  std::vector<ExprPoint> ex = zt.exprs;
  std::vector<ExprPoint> extra = {
      {"1", "u", "-1", "u"},   {"1", "-u", "-1", "-u"}, {"1", "1", "-1", "1"},   {"1", "-1", "-1", "-1"},
      {"1", "u", "1", "-u"},   {"1", "-u", "1", "u"},   {"1", "1", "1", "-1"},   {"1", "-1", "1", "1"},
      {"1", "u", "u", "1"},    {"1", "-u", "u", "-1"},  {"1", "1", "u", "-u"},   {"1", "-1", "u", "u"},
      {"1", "u", "-u", "-1"},  {"1", "-u", "-u", "1"},  {"1", "1", "-u", "u"},   {"1", "-1", "-u", "-u"},
      {"1", "u", "0", "0"},    {"1", "-u", "0", "0"},   {"1", "1", "0", "0"},    {"1", "-1", "0", "0"},
      {"0", "0", "1", "-u"},   {"0", "0", "1", "u"},    {"0", "0", "1", "-1"},   {"0", "0", "1", "1"}};
  ex.insert(ex.end(), extra.begin(), extra.end());
  ConfigTags tags;
  tags.ab = {6, 10};
  return realize("klein", 3, order_symbol("u", 4), ex, tags, zt.field.prime);
}

std::vector<ExprPoint> penrose_exprs() {
  const char* raw[40][4] = {
      {"1", "t", "t^2", "0"},      {"1", "0", "0", "0"},        {"0", "1", "0", "0"},        {"0", "0", "1", "0"},
      {"-1", "0", "t^2", "1"},     {"0", "-1", "t", "1"},       {"t^2", "1", "0", "1"},      {"t", "0", "1", "1"},
      {"0", "t^2", "1", "-1"},     {"1", "t^(-2)", "0", "1"},   {"0", "t", "-1", "1"},       {"t^(-1)", "0", "1", "1"},
      {"1", "0", "t", "-1"},       {"1", "t^2", "0", "1"},      {"t^(-2)", "1", "0", "1"},   {"0", "1", "t^2", "-1"},
      {"1", "1", "0", "1"},        {"0", "1", "1", "-1"},       {"-1", "0", "1", "1"},       {"t^2", "t", "1", "0"},
      {"0", "0", "0", "1"},        {"0", "t^2", "1", "t"},      {"t", "0", "1", "t^2"},      {"t^(-2)", "t^2", "0", "1"},
      {"0", "1", "1", "t"},        {"1", "0", "-1", "t^(-1)"},  {"1", "0", "-1", "t"},       {"1", "1", "0", "t^2"},
      {"1", "1", "0", "t^(-2)"},   {"0", "1", "1", "t^(-1)"},   {"-1", "1", "t^(-1)", "0"},  {"-1", "1", "t", "0"},
      {"t^2", "-1", "1", "0"},     {"t", "1", "-1", "0"},       {"1", "t^(-1)", "1", "0"},   {"1", "t", "1", "0"},
      {"1", "t^2", "0", "t^(-2)"}, {"0", "1", "t^2", "t"},      {"t", "0", "t^2", "1"},      {"1", "-1", "1", "0"}};
  std::vector<ExprPoint> out;
  for (auto& r : raw) out.push_back({r[0], r[1], r[2], r[3]});
  return out;
}

std::vector<Symbol> penrose_symbols() { return {Symbol{"t", Constraint::MinPoly({1, -1, 1})}}; }

Configuration five_six_subset(int which, u64 prime) {
  static const std::vector<std::vector<int>> rows = {{0, 1, 2, 3}, {0, 1, 3, 4}, {0, 2, 3, 4}};
  auto ex = std_grid_exprs(6, rows[which - 1]);
  auto y = y1_exprs(6);
  ex.insert(ex.end(), y.begin(), y.end());
  ConfigTags tags;
  tags.ab = {5, 6};
  return realize("z" + std::to_string(which), 3, order_symbol("u", 6), ex, tags, prime);
}

Configuration h4(u64 prime) {
  auto ex = std_grid_exprs(5, range(5));
  auto y1 = y1_exprs(5), y2 = y2_exprs(5);
  ex.insert(ex.end(), y1.begin(), y1.end());
  ex.insert(ex.end(), y2.begin(), y2.end());
  const std::string qs = "(u^(-1)+u-1)";
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      ex.push_back({"1", mul_expr(qs, upow("u", j)), mul_expr(qs, upow("u", i)), upow("u", i + j)});
  ConfigTags tags;
  tags.ab = {6, 10};
  return realize("h4", 3, order_symbol("u", 5), ex, tags, prime);
}

Configuration root_system_e(int rank_e, u64 prime) {
  // E8 roots up to sign: e_i +- e_j, and (+-1)^8 with an even number of minus
  // signs (the half-integer roots scaled by 2). E7 keeps those with zero
  // coordinate sum and drops the last coordinate.
  std::vector<std::vector<int>> roots;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int s : {1, -1}) {
        std::vector<int> v(8, 0);
        v[i] = 1;
        v[j] = s;
        roots.push_back(v);
      }
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    if (mask & 1) continue;  // fix the sign of the first coordinate
    std::vector<int> v(8);
    for (int k = 0; k < 8; ++k) v[k] = (mask >> k) & 1 ? -1 : 1;
    roots.push_back(v);
  }
  std::vector<ExprPoint> ex;
  for (const auto& v : roots) {
    int sum = 0;
    for (int x : v) sum += x;
    if (rank_e == 7 && sum != 0) continue;
    ExprPoint e;
    for (int k = 0; k < (rank_e == 7 ? 7 : 8); ++k) e.push_back(std::to_string(v[k]));
    ex.push_back(e);
  }
  return realize("e" + std::to_string(rank_e), rank_e == 7 ? 6 : 7, {}, ex, {}, prime);
}

Configuration b_config(int n, u64 prime) {
  std::vector<ExprPoint> ex;
  for (int i = 0; i <= n; ++i) {
    ExprPoint e(n + 1, "0");
    e[i] = "1";
    ex.push_back(e);
  }
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (const char* s : {"1", "-1"}) {
        ExprPoint e(n + 1, "0");
        e[i] = "1";
        e[j] = s;
        ex.push_back(e);
      }
  return realize("b" + std::to_string(n + 1), n, {}, ex, {}, prime);
}

}  // namespace

Configuration realize(std::string label, int ambient_dim, std::vector<Symbol> symbols, std::vector<ExprPoint> exprs,
                      ConfigTags tags, u64 prime) {
  Configuration z;
  z.label = std::move(label);
  z.ambient_dim = ambient_dim;
  z.field = make_field(symbols, prime);
  z.tags = tags;
  Fp f = z.fp();
  std::unordered_map<ProjPoint, size_t, ProjPointHash> seen;
  for (size_t i = 0; i < exprs.size(); ++i) {
    const auto& e = exprs[i];
    if (static_cast<int>(e.size()) != ambient_dim + 1)
      throw Error("ParseError", "point " + std::to_string(i + 1) + " has " + std::to_string(e.size()) + " coordinates");
    Vec v;
    for (const auto& s : e) v.push_back(eval_expr(s, z.field));
    ProjPoint p;
    try {
      p = make_point(f, v);
    } catch (const Error&) {
      throw Error("ZeroVector", "point " + std::to_string(i + 1) + " evaluates to zero");
    }
    auto [it, fresh] = seen.emplace(p, i);
    if (!fresh)
      throw Error("DuplicatePoint", "points " + std::to_string(it->second + 1) + " and " + std::to_string(i + 1) + " coincide");
    z.points.push_back(std::move(p));
  }
  z.exprs = std::move(exprs);
  return z;
}

Configuration with_prime(const Configuration& z, u64 prime) {
  return realize(z.label, z.ambient_dim, z.field.symbols, z.exprs, z.tags, prime);
}

Configuration from_points(std::string label, const FieldSpec& fs, const std::vector<ProjPoint>& pts) {
  Configuration z;
  z.label = std::move(label);
  z.ambient_dim = pts.empty() ? 0 : pts[0].ambient_dim();
  z.field = fs;
  std::unordered_set<ProjPoint, ProjPointHash> seen;
  for (const auto& p : pts) {
    if (p.ambient_dim() != z.ambient_dim) throw Error("MixedAmbient", "points live in different spaces");
    if (!seen.insert(p).second) throw Error("DuplicatePoint", "repeated point");
    ExprPoint e;
    for (u64 x : p.c) e.push_back(std::to_string(x));
    z.exprs.push_back(e);
    z.points.push_back(p);
  }
  return z;
}

Configuration subset(const Configuration& z, const std::vector<size_t>& idx, std::string label) {
  Configuration out = z;
  out.label = std::move(label);
  out.exprs.clear();
  out.points.clear();
  out.tags = {};
  for (size_t i : idx) {
    out.exprs.push_back(z.exprs.at(i));
    out.points.push_back(z.points.at(i));
  }
  return out;
}

Configuration union_of(const Configuration& a, const Configuration& b, std::string label) {
  if (!(a.field == b.field) || a.ambient_dim != b.ambient_dim)
    throw Error("FieldMismatch", "configurations live over different fields or spaces");
  Configuration out = a;
  out.label = std::move(label);
  out.tags = {};
  std::unordered_set<ProjPoint, ProjPointHash> seen(a.points.begin(), a.points.end());
  for (size_t i = 0; i < b.size(); ++i) {
    if (!seen.insert(b.points[i]).second) continue;
    out.points.push_back(b.points[i]);
    out.exprs.push_back(b.exprs[i]);
  }
  return out;
}

Configuration grid(int a, int b, const std::vector<P1Param>& pa, const std::vector<P1Param>& pb, std::vector<Symbol> symbols,
                   u64 prime) {
  if (static_cast<int>(pa.size()) != a || static_cast<int>(pb.size()) != b)
    throw Error("DuplicateParams", "parameter counts do not match (a,b)");
  FieldSpec fs = make_field(symbols, prime);
  Fp f = fs.field();
  for (const auto* ps : {&pa, &pb}) {
    std::unordered_set<ProjPoint, ProjPointHash> seen;
    for (const auto& x : *ps)
      if (!seen.insert(make_point(f, {eval_expr(x.a, fs), eval_expr(x.b, fs)})).second)
        throw Error("DuplicateParams", "repeated P^1 parameter");
  }
  std::vector<ExprPoint> ex;
  for (const auto& x : pa)
    for (const auto& y : pb) ex.push_back(segre_expr(x, y));
  ConfigTags tags;
  tags.ab = {std::min(a, b), std::max(a, b)};
  return realize("grid" + std::to_string(a) + "x" + std::to_string(b), 3, symbols, ex, tags, fs.prime);
}

Configuration roots_grid(int a, int b, u64 prime) {
  int n = std::max(a, b);
  std::vector<P1Param> pa, pb;
  for (int i = 0; i < a; ++i) pa.push_back({"1", upow("u", i)});
  for (int j = 0; j < b; ++j) pb.push_back({"1", upow("u", j)});
  return grid(a, b, pa, pb, order_symbol("u", n), prime);
}

Configuration std_construction(int n, StdWhich which, u64 prime) {
  if (n < 3) throw Error("BadParameter", "n must be at least 3");
  if (which == StdWhich::Y1Y2 && n % 2) throw Error("OddNForY1Y2", "Y1 and Y2 together need n even");
  auto ex = std_grid_exprs(n, range(n));
  ConfigTags tags;
  tags.std_n = n;
  tags.std_which = which;
  std::string label = "std" + std::to_string(n) + "_";
  if (which != StdWhich::Y2) {
    auto y = y1_exprs(n);
    ex.insert(ex.end(), y.begin(), y.end());
  }
  if (which != StdWhich::Y1) {
    auto y = y2_exprs(n);
    ex.insert(ex.end(), y.begin(), y.end());
  }
  label += which == StdWhich::Y1 ? "y1" : which == StdWhich::Y2 ? "y2" : "y1y2";
  tags.ab = {n, which == StdWhich::Y1Y2 ? n + 2 : n + 1};
  return realize(label, 3, order_symbol("u", n), ex, tags, prime);
}

Configuration extend_standard(const Configuration& z) {
  if (!z.tags.std_n || !z.tags.std_which) throw Error("NotStandard", "input was not built by std_construction");
  int n = *z.tags.std_n;
  std::vector<ExprPoint> ex = z.exprs;
  ConfigTags tags;
  switch (*z.tags.std_which) {
    case StdWhich::Y1:
      ex.push_back({"1", "0", "0", "0"});
      for (int i = 0; i < n; ++i) ex.push_back({"1", "0", upow("u", i), "0"});
      tags.ab = {n + 1, n + 1};
      break;
    case StdWhich::Y2:
      ex.push_back({"0", "1", "0", "0"});
      for (int i = 0; i < n; ++i) ex.push_back({"0", "1", "0", upow("u", i)});
      tags.ab = {n + 1, n + 1};
      break;
    case StdWhich::Y1Y2:
      for (int i = 0; i < n; ++i) ex.push_back({"1", "0", upow("u", i), "0"});
      for (int i = 0; i < n; ++i) ex.push_back({"0", "1", "0", upow("u", i)});
      for (const auto& e : std::vector<ExprPoint>{{"1", "0", "0", "0"}, {"0", "0", "0", "1"}, {"0", "0", "1", "0"}, {"0", "1", "0", "0"}})
        ex.push_back(e);
      tags.ab = {n + 2, n + 2};
      break;
  }
  return realize(z.label + "_ext", 3, z.field.symbols, ex, tags, z.field.prime);
}

Configuration remove_lines(const Configuration& z, const std::vector<Flat>& lines) {
  Fp f = z.fp();
  std::vector<size_t> keep;
  std::vector<int> counts(lines.size(), 0);
  for (size_t i = 0; i < z.size(); ++i) {
    bool on = false;
    for (size_t l = 0; l < lines.size(); ++l)
      if (flat_contains(f, lines[l], z.points[i])) {
        on = true;
        ++counts[l];
      }
    if (!on) keep.push_back(i);
  }
  Configuration out = subset(z, keep, lines.empty() ? z.label : z.label + "_minus" + std::to_string(lines.size()));
  if (lines.empty()) {
    out.tags = z.tags;
    return out;
  }
  // Removing j disjoint lines of k points each from an (a,b) set leaves
  // (a, b-j) when k = a and (a-j, b) when k = b.
  if (z.tags.ab && keep.size() + [&] { size_t s = 0; for (int c : counts) s += c; return s; }() == z.size()) {
    auto [a, b] = *z.tags.ab;
    int j = static_cast<int>(lines.size());
    bool all_a = true, all_b = true;
    for (int c : counts) {
      all_a = all_a && c == a;
      all_b = all_b && c == b;
    }
    if (all_a && b - j >= 1) out.tags.ab = {std::min(a, b - j), std::max(a, b - j)};
    else if (all_b && a - j >= 1) out.tags.ab = {std::min(a - j, b), std::max(a - j, b)};
  }
  return out;
}

Configuration named(const std::string& label, u64 prime) {
  auto tagged = [](int a, int b) {
    ConfigTags t;
    t.ab = {a, b};
    return t;
  };
  if (label == "d4")
    return realize(label, 3, {},
                   parse_rows({"1100", "*100", "1010", "*010", "1001", "*001", "0110", "0*10", "0101", "0*01", "0011", "00*1"}),
                   tagged(3, 4), prime);
  if (label == "d4_grid")
    return realize(label, 3, {}, parse_rows({"0010", "0011", "0001", "1010", "1111", "0101", "1000", "1100", "0100"}),
                   tagged(3, 3), prime);
  if (label == "cube_grid")
    return realize(label, 3, {}, parse_rows({"1001", "0101", "0011", "0111", "1011", "1101", "1000", "0100", "0010"}),
                   tagged(3, 3), prime);
  if (label == "f4")
    return realize(label, 3, {},
                   parse_rows({"1000", "0100", "1100", "1*00", "0010", "0001", "0011", "001*",
                               "1010", "0101", "1111", "1*1*", "10*0", "010*", "11**", "1**1",
                               "1001", "01*0", "11*1", "1*11", "100*", "0110", "111*", "1***"}),
                   tagged(4, 6), prime);
  if (label == "klein") return klein(prime);
  if (label == "penrose") return realize(label, 3, penrose_symbols(), penrose_exprs(), tagged(5, 8), prime);
  if (label == "half_penrose") {
    auto all = penrose_exprs();
    std::vector<ExprPoint> ex;
    for (int k : {1, 2, 32, 35, 29, 7, 37, 3, 30, 15, 5, 36, 11, 14, 39, 40, 8, 17, 33, 38}) ex.push_back(all[k - 1]);
    return realize(label, 3, penrose_symbols(), ex, tagged(4, 5), prime);
  }
  if (label == "h4") return h4(prime);
  if (label == "d4_matrix") {
    QMat u = mat_u();
    return columns_config(label, {qident(), u, qmul(u, u)}, tagged(3, 4), prime);
  }
  if (label == "f4_matrix") {
    QMat u = mat_u(), t = mat_t_scaled();
    std::vector<QMat> ms;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) ms.push_back(qmul(qpow(t, i), qpow(u, j)));
    return columns_config(label, ms, tagged(4, 6), prime);
  }
  if (label == "h4_matrix") {
    QMat u = mat_u(), v = mat_v();
    std::vector<QMat> ms;
    for (int k = 0; k < 5; ++k)
      for (int j = 0; j < 3; ++j) ms.push_back(qmul(qpow(v, k), qpow(u, j)));
    return columns_config(label, ms, tagged(6, 10), prime);
  }
  if (label == "cell120") {
    QMat u = mat_u(), v = mat_v(), t = mat_t_scaled();
    std::vector<QMat> ms;
    for (int k = 0; k < 5; ++k)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) ms.push_back(qmul(qmul(qpow(v, k), qpow(t, i)), qpow(u, j)));
    return columns_config(label, ms, tagged(10, 12), prime);
  }
  if (label == "rays300") {
    QMat u = mat_u(), v = mat_v(), w = mat_w();
    std::vector<QMat> ms;
    for (int n = 0; n < 5; ++n)
      for (int m = 0; m < 5; ++m)
        for (int l = 0; l < 3; ++l) ms.push_back(qmul(qmul(qpow(w, n), qpow(v, m)), qpow(u, l)));
    return columns_config(label, ms, {}, prime);
  }
  if (label == "z1" || label == "z2" || label == "z3") return five_six_subset(label[1] - '0', prime);
  if (label == "grid23")
    return realize(label, 3, {}, parse_rows({"1000", "0100", "1100", "0010", "0001", "0011"}), tagged(2, 3), prime);
  if (label == "e7") return root_system_e(7, prime);
  if (label == "e8") return root_system_e(8, prime);
  if (label == "ks13")
    return realize(label, 2, {},
                   parse_rows({"100", "010", "001", "011", "01*", "101", "10*", "110", "1*0", "*11", "1*1", "11*", "111"}), {},
                   prime);
  if (label == "ks21") {
    std::vector<ExprPoint> ex = {{"0", "1", "-1"},    {"0", "1", "-q"},    {"0", "1", "-q^2"}, {"-1", "0", "1"},
                                 {"-q", "0", "1"},    {"-q^2", "0", "1"},  {"1", "-1", "0"},   {"1", "-q", "0"},
                                 {"1", "-q^2", "0"},  {"1", "0", "0"},     {"0", "1", "0"},    {"0", "0", "1"},
                                 {"1", "1", "1"},     {"1", "q", "q^2"},   {"1", "q^2", "q"},  {"1", "q^2", "q^2"},
                                 {"q^2", "1", "q^2"}, {"q^2", "q^2", "1"}, {"1", "q", "q"},    {"q", "1", "q"},
                                 {"q", "q", "1"}};
    return realize(label, 2, order_symbol("q", 3), ex, {}, prime);
  }
  if (label == "peres33") {
    std::vector<std::string> rows = {"100", "010", "001", "110", "101", "011", "1*0", "10*", "01*", "01v", "10v",
                                     "1v0", "0*v", "*0v", "*v0", "0v1", "v01", "v10", "0v*", "v0*", "v*0", "11v",
                                     "**v", "1*v", "*1v", "1v1", "1v*", "*v*", "*v1", "v11", "v1*", "v*1", "v**"};
    std::vector<ExprPoint> ex;
    for (const auto& r : rows) {
      ExprPoint e;
      for (char c : r) e.push_back(c == '*' ? "-1" : c == 'v' ? "v" : std::string(1, c));
      ex.push_back(e);
    }
    return realize(label, 2, {Symbol{"v", Constraint::MinPoly({-2, 0, 1})}}, ex, {}, prime);
  }
  if (label.size() >= 2 && label[0] == 'b' && std::isdigit(static_cast<unsigned char>(label[1]))) {
    int k = std::stoi(label.substr(1));
    if (k >= 3) return b_config(k - 1, prime);
  }
  throw Error("UnknownLabel", label);
}

std::vector<std::string> named_labels() {
  return {"d4", "d4_grid", "cube_grid", "f4", "klein", "penrose", "half_penrose", "h4", "d4_matrix", "f4_matrix",
          "h4_matrix", "cell120", "rays300", "z1", "z2", "z3", "grid23", "e7", "e8", "ks13", "ks21", "peres33", "b3",
          "b4", "b5"};
}

FlatUnion skeleton(const Fp& f, int n, int codim) {
  if (n < 2 || codim < 1 || codim > n) throw Error("BadParameter", "invalid skeleton request");
  int k = n - codim;  // projective dimension of each flat
  FlatUnion fu;
  fu.ambient_dim = n;
  std::vector<int> idx(k + 1);
  for (int i = 0; i <= k; ++i) idx[i] = i;
  for (;;) {
    std::vector<ProjPoint> pts;
    for (int i : idx) {
      Vec v(n + 1, 0);
      v[i] = 1;
      pts.push_back(ProjPoint{v});
    }
    fu.flats.push_back(span_flat(f, pts));
    int i = k;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j <= k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return fu;
}

std::string to_json(const Configuration& z) {
  json j;
  j["label"] = z.label;
  j["ambient_dim"] = z.ambient_dim;
  json syms = json::array();
  for (const auto& s : z.field.symbols) {
    json e;
    e["name"] = s.name;
    if (s.constraint.kind == Constraint::Kind::Order) e["order"] = s.constraint.order;
    else e["minpoly"] = s.constraint.coeffs;
    syms.push_back(e);
  }
  j["symbols"] = syms;
  j["points"] = z.exprs;
  if (z.tags.ab || z.tags.std_n) {
    json t = json::object();
    if (z.tags.ab) {
      t["a"] = z.tags.ab->first;
      t["b"] = z.tags.ab->second;
    }
    if (z.tags.std_n) {
      t["std_n"] = *z.tags.std_n;
      t["std_which"] = *z.tags.std_which == StdWhich::Y1 ? "Y1" : *z.tags.std_which == StdWhich::Y2 ? "Y2" : "Y1Y2";
    }
    j["tags"] = t;
  }
  return j.dump(1);
}

namespace {

std::string line_col(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

Configuration from_json(const std::string& text, u64 prime) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("ParseError", line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  try {
    std::vector<Symbol> syms;
    for (const auto& s : j.at("symbols")) {
      Symbol sym;
      sym.name = s.at("name").get<std::string>();
      if (s.contains("order")) sym.constraint = Constraint::Order(s.at("order").get<i64>());
      else sym.constraint = Constraint::MinPoly(s.at("minpoly").get<std::vector<i64>>());
      syms.push_back(sym);
    }
    ConfigTags tags;
    if (j.contains("tags")) {
      const auto& t = j["tags"];
      if (t.contains("a")) tags.ab = {t["a"].get<int>(), t["b"].get<int>()};
      if (t.contains("std_n")) {
        tags.std_n = t["std_n"].get<int>();
        std::string w = t.at("std_which").get<std::string>();
        tags.std_which = w == "Y1" ? StdWhich::Y1 : w == "Y2" ? StdWhich::Y2 : StdWhich::Y1Y2;
      }
    }
    return realize(j.at("label").get<std::string>(), j.at("ambient_dim").get<int>(), syms,
                   j.at("points").get<std::vector<ExprPoint>>(), tags, prime);
  } catch (const json::exception& e) {
    throw Error("ParseError", std::string("schema: ") + e.what());
  }
}

void save(const Configuration& z, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("IOError", "cannot write " + path);
  out << to_json(z) << "\n";
}

Configuration load(const std::string& path, u64 prime) {
  std::ifstream in(path);
  if (!in) throw Error("IOError", "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str(), prime);
}

}  // namespace gp
