#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "kbh/complexes/complex.hpp"

namespace kbh {

struct Bidegree {
  int p = 0;
  int q = 0;

  auto operator<=>(const Bidegree&) const = default;
  Bidegree operator+(const Bidegree& o) const { return {p + o.p, q + o.q}; }
};

std::string to_string(const Bidegree& b);

using BlockMap = std::map<Bidegree, Matrix>;

/// Bounded double complex with anticommuting differentials
/// d1 : (p,q) -> (p+1,q) and d2 : (p,q) -> (p,q+1).
class DoubleComplex {
 public:
  DoubleComplex() = default;

  void set_dim(Bidegree b, std::size_t dim);
  void set_d1(Bidegree from, Matrix m);
  void set_d2(Bidegree from, Matrix m);

  std::size_t dim(Bidegree b) const;
  Matrix d1(Bidegree from) const;
  Matrix d2(Bidegree from) const;
  const std::map<Bidegree, std::size_t>& dims() const { return dims_; }
  const BlockMap& d1_blocks() const { return d1_; }
  const BlockMap& d2_blocks() const { return d2_; }

  bool empty() const { return dims_.empty(); }
  int min_p() const;
  int max_p() const;

  /// Throws ValidationError naming the identity and the bidegree when
  /// d1^2, d2^2 or d1 d2 + d2 d1 is nonzero.
  void validate() const;

 private:
  std::map<Bidegree, std::size_t> dims_;
  BlockMap d1_;
  BlockMap d2_;
};

/// Position of each cell inside the total degree k = p + q, cells ordered
/// by increasing p.
struct TotalLayout {
  struct Cell {
    Bidegree bidegree;
    std::size_t offset;
    std::size_t dim;
  };
  std::map<int, std::vector<Cell>> cells;
  std::map<int, std::size_t> totals;

  explicit TotalLayout(const DoubleComplex& dc);
  std::size_t offset(Bidegree b) const;
  std::size_t total(int k) const;
};

/// Simple complex with D = d1 + d2 (no extra signs).
Complex total_complex(const DoubleComplex& dc);

/// Result(p,q) = dc(p+m, q+n); differentials carried along unchanged.
DoubleComplex shift(const DoubleComplex& dc, int m, int n);

/// Tensor product with d(a (x) b) = da (x) b + (-1)^{p_a+q_a} a (x) db for
/// both d1 and d2.
DoubleComplex tensor_double(const DoubleComplex& a, const DoubleComplex& b);

bool operator==(const DoubleComplex& a, const DoubleComplex& b);

}  // namespace kbh
