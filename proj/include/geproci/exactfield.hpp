#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gp {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Every failure carries a short machine-readable kind ("NotSquare", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Arithmetic mod a prime below 2^32, so products fit in 64 bits.
struct Fp {
  u64 p = 0;

  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, i64 e) const;
  u64 inv(u64 a) const;
  u64 div(u64 a, u64 b) const { return mul(a, inv(b)); }
  u64 from_int(i64 v) const;
  // Maps a residue to its symmetric representative in (-p/2, p/2].
  i64 to_signed(u64 a) const { return a > p / 2 ? static_cast<i64>(a) - static_cast<i64>(p) : static_cast<i64>(a); }
};

bool is_prime(u64 n);

struct Constraint {
  enum class Kind { Order, MinPoly };
  Kind kind = Kind::Order;
  i64 order = 1;
  // Monic quadratic c0 + c1 x + x^2, stored as {c0, c1, 1}.
  std::vector<i64> coeffs;

  static Constraint Order(i64 n) { return {Kind::Order, n, {}}; }
  static Constraint MinPoly(std::vector<i64> c);
  bool operator==(const Constraint&) const = default;
};

struct Symbol {
  std::string name;
  Constraint constraint;
  bool operator==(const Symbol&) const = default;
};

struct FieldSpec {
  u64 prime = 0;
  std::vector<Symbol> symbols;
  std::map<std::string, u64> resolved;

  Fp field() const { return Fp{prime}; }
  bool operator==(const FieldSpec&) const = default;
};

constexpr u64 kDefaultMinBound = u64{1} << 30;

// Smallest prime >= min_bound for which every constraint is satisfiable.
u64 choose_prime(const std::vector<Constraint>& constraints, u64 min_bound = kDefaultMinBound);

bool satisfiable(u64 p, const Constraint& c);

u64 resolve_symbol(u64 p, const Constraint& c);

// Square root mod an odd prime; throws if a is a non-residue.
u64 sqrt_mod(u64 a, u64 p);

u64 multiplicative_order(u64 a, u64 p);

// Resolves all symbols over the given prime, or over choose_prime() when prime is 0.
FieldSpec make_field(const std::vector<Symbol>& symbols, u64 prime = 0, u64 min_bound = kDefaultMinBound);

// Evaluates a coordinate expression: integers, symbols, unary minus, + - * /,
// ^ with (possibly negative) integer exponents, parentheses.
u64 eval_expr(const std::string& text, const FieldSpec& fs);

}  // namespace gp
