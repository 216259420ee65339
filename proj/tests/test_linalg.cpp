#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "geproci/linalg.hpp"

using namespace gp;

namespace {

const Fp F{101};

// Plain elimination over a small prime, independent of the library routine.
size_t oracle_rank(std::vector<std::vector<long>> m) {
  size_t r = 0, cols = m.empty() ? 0 : m[0].size();
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t piv = r;
    while (piv < m.size() && m[piv][c] % 101 == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      long a = m[i][c], b = m[r][c];
      for (size_t k = 0; k < cols; ++k) m[i][k] = ((m[i][k] * b - m[r][k] * a) % 101 + 101) % 101;
    }
    ++r;
  }
  return r;
}

// Leibniz expansion.
long oracle_det(const Matrix& m) {
  std::vector<size_t> p(m.rows);
  std::iota(p.begin(), p.end(), 0);
  long total = 0;
  do {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    long prod = 1;
    for (size_t i = 0; i < p.size(); ++i) prod = prod * static_cast<long>(m(i, p[i])) % 101;
    total = (total + (inv % 2 ? 101 - prod : prod)) % 101;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

Matrix random_matrix(size_t r, size_t c, std::mt19937_64& rng, int rank_cap = -1) {
  Matrix m(r, c);
  if (rank_cap < 0) {
    for (auto& x : m.a) x = rng() % 101;
    return m;
  }
  Matrix a(r, static_cast<size_t>(rank_cap)), b(static_cast<size_t>(rank_cap), c);
  for (auto& x : a.a) x = rng() % 101;
  for (auto& x : b.a) x = rng() % 101;
  return multiply(F, a, b);
}

}  // namespace

TEST_CASE("rank matches an independent elimination") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    int cap = static_cast<int>(rng() % 5);
    Matrix m = random_matrix(r, c, rng, t % 2 ? cap : -1);
    std::vector<std::vector<long>> v(r, std::vector<long>(c));
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) v[i][j] = static_cast<long>(m(i, j));
    CHECK(rank(F, m) == oracle_rank(v));
    CHECK(rank(F, transpose(m)) == rank(F, m));
  }
}

TEST_CASE("kernel basis has the right size and lies in the kernel") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    size_t r = 1 + rng() % 6, c = 1 + rng() % 8;
    Matrix m = random_matrix(r, c, rng, static_cast<int>(rng() % 4));
    auto ker = kernel_basis(F, m);
    CHECK(ker.size() + rank(F, m) == c);
    for (const auto& v : ker)
      for (u64 x : apply(F, m, v)) CHECK(x == 0);
    if (!ker.empty()) CHECK(rank(F, Matrix::from_rows(ker, c)) == ker.size());
  }
}

TEST_CASE("determinant matches Leibniz expansion") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    size_t n = 1 + rng() % 5;
    Matrix m = random_matrix(n, n, rng, t % 3 == 0 ? static_cast<int>(n) - 1 : -1);
    CHECK(static_cast<long>(det(F, m)) == oracle_det(m));
  }
}

TEST_CASE("rref is reduced and spans the row space") {
  std::mt19937_64 rng(14);
  Matrix m = random_matrix(5, 7, rng, 3);
  Echelon e = rref(F, m);
  REQUIRE(e.R.rows == 3);
  for (size_t i = 0; i < e.R.rows; ++i) {
    CHECK(e.R(i, e.pivots[i]) == 1);
    for (size_t k = 0; k < e.R.rows; ++k)
      if (k != i) CHECK(e.R(k, e.pivots[i]) == 0);
  }
  Matrix both = m;
  for (size_t i = 0; i < e.R.rows; ++i) both.append_row(e.R.row_vec(i));
  CHECK(rank(F, both) == 3);
}

TEST_CASE("solve") {
  std::mt19937_64 rng(15);
  Matrix m = random_matrix(4, 4, rng);
  while (det(F, m) == 0) m = random_matrix(4, 4, rng);
  Vec x0 = {3, 1, 4, 1};
  Vec b = apply(F, m, x0), x;
  REQUIRE(solve(F, m, b, x));
  CHECK(x == x0);
  Matrix sing = random_matrix(4, 4, rng, 2);
  Vec bad = {1, 0, 0, 0};
  Vec y;
  if (rank(F, sing) == 2) {
    Matrix col(4, 5);
    for (size_t i = 0; i < 4; ++i) {
      for (size_t j = 0; j < 4; ++j) col(i, j) = sing(i, j);
      col(i, 4) = bad[i];
    }
    CHECK(solve(F, sing, bad, y) == (rank(F, col) == 2));
  }
}
