#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "kbh/exactla/linalg.hpp"

namespace kbh {

/// degree -> dimension; only positive dimensions are stored.
using GradedDims = std::map<int, std::size_t>;

/// Bounded cochain complex over Q. The differential d^k : C^k -> C^{k+1}
/// is a dim(k+1) x dim(k) matrix acting on column vectors; missing
/// differentials are zero.
class Complex {
 public:
  Complex() = default;

  void set_dim(int degree, std::size_t dim);
  /// Requires the shape dim(k+1) x dim(k); zero matrices are not stored.
  void set_differential(int degree, Matrix d);

  std::size_t dim(int degree) const;
  Matrix differential(int degree) const;
  const GradedDims& dims() const { return dims_; }

  bool empty() const { return dims_.empty(); }
  int min_degree() const;
  int max_degree() const;

  /// Throws ValidationError if some d^{k+1} d^k is nonzero.
  void validate() const;

 private:
  GradedDims dims_;
  std::map<int, Matrix> diffs_;
};

/// dim H^k = dim ker d^k - rank d^{k-1}, for every degree in
/// [min_degree, max_degree] (zeros included).
std::map<int, std::size_t> homology_dims(const Complex& c);

/// sum_k (-1)^k n_k over a graded dimension table.
long long alternating_sum(const std::map<int, std::size_t>& dims);

/// Chosen basis of H^k: boundaries B plus cycle representatives extending
/// a basis of B to one of Z.
struct HomologyBasis {
  Matrix boundaries;
  Matrix representatives;

  std::size_t dim() const { return representatives.cols(); }
  /// Class coordinates of the given cycles (columns). Throws
  /// std::invalid_argument if a column is not a cycle in the span.
  Matrix coordinates(const Matrix& cycles) const;
};

HomologyBasis homology_basis(const Complex& c, int degree);

/// Degreewise linear maps between two complexes; missing components are
/// zero. Shapes are target.dim(k) x source.dim(k).
struct ChainMap {
  Complex source;
  Complex target;
  std::map<int, Matrix> components;

  Matrix at(int degree) const;
  /// Throws ValidationError if d f != f d in some degree.
  void validate() const;
};

}  // namespace kbh
