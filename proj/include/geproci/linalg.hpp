#pragma once

#include <vector>

#include "geproci/exactfield.hpp"

namespace gp {

using Vec = std::vector<u64>;

struct Matrix {
  size_t rows = 0, cols = 0;
  std::vector<u64> a;

  Matrix() = default;
  Matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
  static Matrix from_rows(const std::vector<Vec>& rs, size_t cols);
  static Matrix identity(size_t n);

  u64& operator()(size_t r, size_t c) { return a[r * cols + c]; }
  u64 operator()(size_t r, size_t c) const { return a[r * cols + c]; }
  u64* row(size_t r) { return a.data() + r * cols; }
  const u64* row(size_t r) const { return a.data() + r * cols; }
  Vec row_vec(size_t r) const { return Vec(row(r), row(r) + cols); }
  void append_row(const Vec& v);
  bool operator==(const Matrix&) const = default;
};

struct Echelon {
  Matrix R;                   // reduced row echelon form, zero rows dropped
  std::vector<size_t> pivots; // pivot column of each row of R
};

Matrix transpose(const Matrix& m);
Matrix multiply(const Fp& f, const Matrix& x, const Matrix& y);
Vec apply(const Fp& f, const Matrix& m, const Vec& v);

size_t rank(const Fp& f, Matrix m);
Echelon rref(const Fp& f, Matrix m);
std::vector<Vec> kernel_basis(const Fp& f, const Matrix& m);
u64 det(const Fp& f, Matrix m);
// Solves m x = b; returns false if inconsistent.
bool solve(const Fp& f, const Matrix& m, const Vec& b, Vec& x);

}  // namespace gp
