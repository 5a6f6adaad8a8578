#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kbh/exactla/matrix.hpp"

namespace kbh {

/// Forward elimination of a rational matrix by fraction-free (Bareiss)
/// steps on the integer row multiples. The pivot is always the first
/// remaining nonzero row, at its smallest eligible column.
///
/// Columns at or beyond `pivot_limit` are carried along but never pivoted
/// on; solve() uses this for augmented systems [A | b].
class Echelon {
 public:
  using IntRow = std::map<std::size_t, Integer>;

  struct Pivot {
    std::size_t source_row;  // row index in the input matrix
    std::size_t column;
    IntRow row;  // reduced row; zero at every earlier pivot column
  };

  explicit Echelon(const Matrix& m);
  Echelon(const Matrix& m, std::size_t pivot_limit);

  std::size_t rank() const { return pivots_.size(); }
  const std::vector<Pivot>& pivots() const { return pivots_; }
  /// Rows with no nonzero entry left in the eligible columns.
  const std::vector<IntRow>& residual() const { return residual_; }
  std::size_t cols() const { return cols_; }
  std::size_t pivot_limit() const { return limit_; }

  /// Solves the eliminated homogeneous system for the eligible
  /// coordinates, given values of the non-eligible coordinates
  /// (`fixed_tail`, indexed from pivot_limit) and of the free eligible
  /// coordinates (`free_values`, indexed by column; pivot entries ignored).
  std::vector<Rational> back_substitute(const std::vector<Rational>& fixed_tail,
                                        const std::vector<Rational>& free_values) const;

 private:
  std::vector<Pivot> pivots_;
  std::vector<IntRow> residual_;
  std::size_t cols_ = 0;
  std::size_t limit_ = 0;
};

std::size_t rank(const Matrix& m);

/// Columns span {v : m v = 0}; one vector per free column, scaled to a
/// primitive integer vector.
class Subspace;
Subspace kernel_basis(const Matrix& m);

/// Some X with a X = b (all columns of b), or nullopt if any column of b
/// lies outside the column space of a. Free variables are set to zero.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Indices of a maximal linearly independent prefix-greedy set of columns.
std::vector<std::size_t> independent_columns(const Matrix& m);

/// A linear subspace of Q^ambient, stored by a column basis.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0);

  /// Span of the columns of `vectors` (dependent columns are dropped).
  static Subspace span(const Matrix& vectors);
  static Subspace full(std::size_t ambient);
  /// Span of the standard basis vectors e_i, i in `indices`.
  static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& indices);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const Matrix& vectors) const;
  bool operator==(const Subspace& other) const;

 private:
  Subspace(std::size_t ambient, Matrix basis);

  std::size_t ambient_;
  Matrix basis_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersection(const Subspace& u, const Subspace& v);
/// m(U) for m: Q^{u.ambient} -> Q^{m.rows}.
Subspace image(const Matrix& m, const Subspace& u);
/// {x : m x in W}.
Subspace preimage(const Matrix& m, const Subspace& w);

struct SubspaceDims {
  std::size_t sum_dim = 0;
  std::size_t intersection_dim = 0;
  std::size_t quotient_dim = 0;  // dim (U+V)/V

  bool operator==(const SubspaceDims&) const = default;
};

/// Throws std::invalid_argument on ambient dimension mismatch.
SubspaceDims subspace_arithmetic(const Subspace& u, const Subspace& v);

}  // namespace kbh
