#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "kbh/exactla/rational.hpp"

namespace kbh {

/// Sparse exact matrix over Q. Rows are ordered maps column -> value and
/// never store zeros, so iteration order (and therefore every algorithm
/// built on top) is deterministic.
class Matrix {
 public:
  using Row = std::map<std::size_t, Rational>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  /// Dense literal, mostly for tests: from_rows({{1, 2}, {2, 4}}).
  static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix from_dense(const std::vector<std::vector<Rational>>& rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  /// Kronecker product; basis index of a_i (x) b_j is i * b.size + j.
  static Matrix kron(const Matrix& a, const Matrix& b);
  static Matrix hstack(const Matrix& left, const Matrix& right);
  static Matrix vstack(const Matrix& top, const Matrix& bottom);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows() == 0 || cols() == 0; }

  const Rational& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Rational& value);
  void add_to(std::size_t i, std::size_t j, const Rational& value);
  const Row& row(std::size_t i) const { return rows_.at(i); }

  bool is_zero() const;
  std::size_t nonzeros() const;

  Matrix transpose() const;
  /// Rows [r0, r0+nr) x cols [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;
  /// Adds `m` into this matrix with its (0,0) entry at (r0, c0).
  void place(std::size_t r0, std::size_t c0, const Matrix& m, const Rational& scale = 1);
  Matrix column(std::size_t j) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix scaled(const Rational& s) const;

  bool operator==(const Matrix& rhs) const;
  bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

  std::vector<std::vector<Rational>> to_dense() const;
  std::string debug_string() const;

 private:
  std::vector<Row> rows_;
  std::size_t cols_ = 0;
};

}  // namespace kbh
