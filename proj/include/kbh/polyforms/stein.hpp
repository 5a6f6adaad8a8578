#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kbh/complexes/complex.hpp"

namespace kbh {

/// One term coeff * z^alpha d/dz_i ^ d/dz_j of a polynomial bivector on C^n.
/// Indices are 0-based.
struct PolyTerm {
  int i = 0;
  int j = 0;
  Rational coeff;
  std::vector<int> alpha;
};

/// Homogeneous polynomial bivector. Terms are normalized to i < j with
/// like terms merged and zeros dropped.
class PolyBivector {
 public:
  /// Throws ValidationError for bad indices or mixed degrees.
  PolyBivector(int n, std::vector<PolyTerm> terms);

  int n() const { return n_; }
  /// Homogeneity degree d. The zero bivector reports 1, so that weights
  /// count polynomial degree only.
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<PolyTerm>& terms() const { return terms_; }

 private:
  int n_ = 0;
  int degree_ = 1;
  std::vector<PolyTerm> terms_;
};

/// Monomial form z^alpha dz_I; I is a bitmask over dz_1..dz_n.
struct FormMonomial {
  std::vector<int> alpha;
  std::uint32_t dz = 0;

  auto operator<=>(const FormMonomial&) const = default;
};

std::string to_string(const FormMonomial& f);

inline constexpr int kDefaultAlphaCap = 8;

/// Weight-w slice: forms with |alpha| + (d-1)|I| = w. The complex puts
/// p-forms in degree -p with differential d_pi = l_pi d - d l_pi.
struct PolyFormSlice {
  int n = 0;
  int d = 1;
  int w = 0;
  std::map<int, std::vector<FormMonomial>> basis;  // by form degree p
  Complex complex;

  std::size_t dim(int p) const;
  long long alternating_dim() const;
};

/// Throws InconsistentData when the slice needs |alpha| > cap, and
/// ValidationError ("bivector not Poisson at weight w") when d_pi^2 != 0.
PolyFormSlice stein_slice(const PolyBivector& pi, int w, int cap = kDefaultAlphaCap);
Complex stein_complex(const PolyBivector& pi, int w, int cap = kDefaultAlphaCap);

/// (w, k) -> dim H_k of the weight-w slice, k = n - p in [0, n].
std::map<std::pair<int, int>, std::size_t> stein_homology(const PolyBivector& pi,
                                                          const std::vector<int>& weights,
                                                          int cap = kDefaultAlphaCap);

}  // namespace kbh
