#include "geproci/linalg.hpp"

#include <utility>

namespace gp {

Matrix Matrix::from_rows(const std::vector<Vec>& rs, size_t cols) {
  Matrix m(rs.size(), cols);
  for (size_t i = 0; i < rs.size(); ++i) {
    if (rs[i].size() != cols) throw Error("ShapeMismatch", "row length differs");
    std::copy(rs[i].begin(), rs[i].end(), m.row(i));
  }
  return m;
}

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void Matrix::append_row(const Vec& v) {
  if (rows == 0 && cols == 0) cols = v.size();
  if (v.size() != cols) throw Error("ShapeMismatch", "row length differs");
  a.insert(a.end(), v.begin(), v.end());
  ++rows;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols, m.rows);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  return t;
}

Matrix multiply(const Fp& f, const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw Error("ShapeMismatch", "cannot multiply");
  Matrix r(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      u64 a = x(i, k);
      if (!a) continue;
      for (size_t j = 0; j < y.cols; ++j) r(i, j) = (r(i, j) + a * y(k, j)) % f.p;
    }
  return r;
}

Vec apply(const Fp& f, const Matrix& m, const Vec& v) {
  Vec out(m.rows, 0);
  for (size_t i = 0; i < m.rows; ++i) {
    u64 s = 0;
    for (size_t j = 0; j < m.cols; ++j) s = (s + m(i, j) * v[j]) % f.p;
    out[i] = s;
  }
  return out;
}

namespace {

// Gaussian elimination in place. With full=true the result is reduced
// (entries above pivots cleared too). Returns pivot columns and the
// parity of row swaps.
std::vector<size_t> eliminate(const Fp& f, Matrix& m, bool full, bool& odd_swaps) {
  const u64 p = f.p;
  std::vector<size_t> pivots;
  odd_swaps = false;
  size_t r = 0;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    size_t piv = r;
    while (piv < m.rows && m(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r) {
      std::swap_ranges(m.row(piv), m.row(piv) + m.cols, m.row(r));
      odd_swaps = !odd_swaps;
    }
    u64* pr = m.row(r);
    if (full) {
      u64 iv = f.inv(pr[c]);
      for (size_t j = c; j < m.cols; ++j) pr[j] = pr[j] * iv % p;
    }
    u64 ipiv = full ? 1 : f.inv(pr[c]);
    size_t start = full ? 0 : r + 1;
    for (size_t i = start; i < m.rows; ++i) {
      if (i == r) continue;
      u64* ri = m.row(i);
      if (ri[c] == 0) continue;
      u64 factor = p - ri[c] * ipiv % p;
      for (size_t j = c; j < m.cols; ++j) {
        if (pr[j]) ri[j] = (ri[j] + factor * pr[j]) % p;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

size_t rank(const Fp& f, Matrix m) {
  bool odd;
  return eliminate(f, m, false, odd).size();
}

Echelon rref(const Fp& f, Matrix m) {
  bool odd;
  auto piv = eliminate(f, m, true, odd);
  m.a.resize(piv.size() * m.cols);
  m.rows = piv.size();
  return {std::move(m), std::move(piv)};
}

std::vector<Vec> kernel_basis(const Fp& f, const Matrix& m) {
  Echelon e = rref(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols, 0);
    v[free] = 1;
    for (size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.R(i, free));
    out.push_back(std::move(v));
  }
  return out;
}

u64 det(const Fp& f, Matrix m) {
  if (m.rows != m.cols) throw Error("NotSquare", std::to_string(m.rows) + "x" + std::to_string(m.cols));
  bool odd;
  auto piv = eliminate(f, m, false, odd);
  if (piv.size() < m.rows) return 0;
  u64 d = odd ? f.p - 1 : 1;
  for (size_t i = 0; i < m.rows; ++i) d = f.mul(d, m(i, i));
  return d;
}

bool solve(const Fp& f, const Matrix& m, const Vec& b, Vec& x) {
  Matrix aug(m.rows, m.cols + 1);
  for (size_t i = 0; i < m.rows; ++i) {
    std::copy(m.row(i), m.row(i) + m.cols, aug.row(i));
    aug(i, m.cols) = b[i];
  }
  Echelon e = rref(f, aug);
  x.assign(m.cols, 0);
  for (size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols) return false;
    x[e.pivots[i]] = e.R(i, m.cols);
  }
  return true;
}

}  // namespace gp
