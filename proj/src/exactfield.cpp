#include "geproci/exactfield.hpp"

#include <cctype>

namespace gp {

namespace {

u64 mulmod128(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod128(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod128(r, a, m);
    a = mulmod128(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

u64 Fp::pow(u64 a, i64 e) const {
  if (e < 0) return pow(inv(a), -e);
  u64 r = 1, b = a % p;
  auto ue = static_cast<u64>(e);
  while (ue) {
    if (ue & 1) r = mul(r, b);
    b = mul(b, b);
    ue >>= 1;
  }
  return r;
}

u64 Fp::inv(u64 a) const {
  if (a % p == 0) throw Error("DivisionByZero", "inverse of 0");
  return pow(a, static_cast<i64>(p - 2));
}

u64 Fp::from_int(i64 v) const {
  i64 r = v % static_cast<i64>(p);
  if (r < 0) r += static_cast<i64>(p);
  return static_cast<u64>(r);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod128(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod128(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

Constraint Constraint::MinPoly(std::vector<i64> c) {
  if (c.size() != 3 || c[2] != 1)
    throw Error("UnsupportedMinPoly", "only monic quadratics [c0,c1,1] are supported");
  return {Kind::MinPoly, 0, std::move(c)};
}

bool satisfiable(u64 p, const Constraint& c) {
  if (c.kind == Constraint::Kind::Order) {
    return c.order >= 1 && (p - 1) % static_cast<u64>(c.order) == 0;
  }
  Fp f{p};
  u64 b = f.from_int(c.coeffs[1]);
  u64 disc = f.sub(f.mul(b, b), f.mul(4, f.from_int(c.coeffs[0])));
  return disc == 0 || f.pow(disc, static_cast<i64>((p - 1) / 2)) == 1;
}

u64 choose_prime(const std::vector<Constraint>& constraints, u64 min_bound) {
  if (min_bound < 100) throw Error("BadBound", "min_bound must be at least 100");
  for (u64 p = min_bound; p < min_bound + (u64{1} << 28); ++p) {
    if (p > 0xFFFFFFFFULL) break;
    if (!is_prime(p)) continue;
    bool ok = true;
    for (const auto& c : constraints) {
      if (!satisfiable(p, c)) { ok = false; break; }
    }
    if (ok) return p;
  }
  throw Error("PrimeSearchExhausted", "no suitable prime found");
}

u64 multiplicative_order(u64 a, u64 p) {
  Fp f{p};
  if (a % p == 0) return 0;
  u64 n = p - 1;
  for (u64 q : prime_factors(p - 1)) {
    while (n % q == 0 && f.pow(a, static_cast<i64>(n / q)) == 1) n /= q;
  }
  return n;
}

u64 sqrt_mod(u64 a, u64 p) {
  Fp f{p};
  a %= p;
  if (a == 0) return 0;
  if (f.pow(a, static_cast<i64>((p - 1) / 2)) != 1) throw Error("NonResidue", "no square root");
  u64 q = p - 1;
  u64 s = 0;
  while ((q & 1) == 0) { q >>= 1; ++s; }
  u64 z = 2;
  while (f.pow(z, static_cast<i64>((p - 1) / 2)) != p - 1) ++z;
  u64 m = s;
  u64 c = f.pow(z, static_cast<i64>(q));
  u64 t = f.pow(a, static_cast<i64>(q));
  u64 r = f.pow(a, static_cast<i64>((q + 1) / 2));
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) { tt = f.mul(tt, tt); ++i; }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = f.mul(b, b);
    m = i;
    c = f.mul(b, b);
    t = f.mul(t, c);
    r = f.mul(r, b);
  }
  return r;
}

u64 resolve_symbol(u64 p, const Constraint& c) {
  if (!satisfiable(p, c)) throw Error("UnsatisfiableConstraint", "no such element mod " + std::to_string(p));
  Fp f{p};
  if (c.kind == Constraint::Kind::Order) {
    auto n = static_cast<u64>(c.order);
    if (n == 1) return 1;
    for (u64 g = 2; g < p; ++g) {
      u64 x = f.pow(g, static_cast<i64>((p - 1) / n));
      if (multiplicative_order(x, p) == n) return x;
    }
    throw Error("UnsatisfiableConstraint", "order search failed");
  }
  u64 b = f.from_int(c.coeffs[1]);
  u64 disc = f.sub(f.mul(b, b), f.mul(4, f.from_int(c.coeffs[0])));
  u64 s = sqrt_mod(disc, p);
  u64 half = f.inv(2);
  u64 r1 = f.mul(f.add(f.neg(b), s), half);
  u64 r2 = f.mul(f.sub(f.neg(b), s), half);
  return std::min(r1, r2);
}

FieldSpec make_field(const std::vector<Symbol>& symbols, u64 prime, u64 min_bound) {
  FieldSpec fs;
  fs.symbols = symbols;
  if (prime == 0) {
    std::vector<Constraint> cs;
    for (const auto& s : symbols) cs.push_back(s.constraint);
    prime = choose_prime(cs, min_bound);
  } else if (!is_prime(prime) || prime <= 100 || prime > 0xFFFFFFFFULL) {
    throw Error("BadPrime", std::to_string(prime) + " is not a prime in (100, 2^32)");
  }
  fs.prime = prime;
  for (const auto& s : symbols) fs.resolved[s.name] = resolve_symbol(prime, s.constraint);
  return fs;
}

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& s, const FieldSpec& fs) : s_(s), fs_(fs), f_(fs.field()) {}

  u64 parse() {
    u64 v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  const std::string& s_;
  const FieldSpec& fs_;
  Fp f_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw Error("ParseError", "column " + std::to_string(pos_ + 1) + " in \"" + s_ + "\": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  // Accepts '-' and the UTF-8 minus sign.
  bool eat_minus() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '-') { ++pos_; return true; }
    if (s_.compare(pos_, 3, "\xE2\x88\x92") == 0) { pos_ += 3; return true; }
    return false;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
    return false;
  }

  u64 expr() {
    u64 v = term();
    for (;;) {
      if (eat('+')) v = f_.add(v, term());
      else if (eat_minus()) v = f_.sub(v, term());
      else return v;
    }
  }

  u64 term() {
    u64 v = unary();
    for (;;) {
      if (eat('*')) {
        v = f_.mul(v, unary());
      } else if (eat('/')) {
        u64 d = unary();
        if (d == 0) fail("division by zero");
        v = f_.div(v, d);
      } else {
        return v;
      }
    }
  }

  u64 unary() {
    if (eat_minus()) return f_.neg(unary());
    return power();
  }

  u64 power() {
    u64 base = atom();
    if (!eat('^')) return base;
    i64 e = exponent();
    if (e < 0 && base == 0) fail("negative power of zero");
    return f_.pow(base, e);
  }

  i64 exponent() {
    bool paren = eat('(');
    bool negative = eat_minus();
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("malformed exponent");
    if (pos_ - start > 9) fail("exponent too large");
    i64 e = std::stoll(s_.substr(start, pos_ - start));
    if (paren && !eat(')')) fail("expected ')' after exponent");
    return negative ? -e : e;
  }

  u64 atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      u64 v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      u64 v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = f_.add(f_.mul(v, 10), static_cast<u64>(s_[pos_] - '0'));
        ++pos_;
      }
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto it = fs_.resolved.find(name);
      if (it == fs_.resolved.end()) throw Error("UnresolvableSymbol", "unknown symbol '" + name + "'");
      return it->second;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

u64 eval_expr(const std::string& text, const FieldSpec& fs) { return ExprParser(text, fs).parse(); }

}  // namespace gp
