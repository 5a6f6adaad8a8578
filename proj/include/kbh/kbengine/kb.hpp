#pragma once

#include <cstddef>
#include <map>

#include "kbh/complexes/spectral.hpp"
#include "kbh/poisson/model.hpp"

namespace kbh {

/// Koszul-Brylinski homology dimensions H_k(X, pi), geometric index
/// k in [0, 2n].
struct KBDims {
  int n = 0;
  std::map<int, std::size_t> dims;

  /// All k in [0, 2n] present, set to zero.
  static KBDims zero(int n);
  std::size_t at(int k) const;
};

/// Equal when n agrees and at(k) agrees for every k.
bool operator==(const KBDims& a, const KBDims& b);

struct HodgeDiamond {
  int n = 0;
  std::map<Bidegree, std::size_t> h;

  std::size_t at(int p, int q) const;
};

bool operator==(const HodgeDiamond& a, const HodgeDiamond& b);

/// Hochschild dimensions HH_k, k in [-n, n].
struct HHDims {
  int n = 0;
  std::map<int, std::size_t> dims;

  std::size_t at(int k) const;
};

bool operator==(const HHDims& a, const HHDims& b);

/// K^{p,q} = A^{-p,q} for -n <= p <= 0 with d1 = d_pi and d2 = dbar.
/// Throws ValidationError for invalid models, and for formal models with
/// a nonzero contraction.
DoubleComplex kb_double_complex(const DolbeaultPoissonModel& m);

/// H_k(X, pi) = H^{k-n} of the total complex.
KBDims kb_homology(const DolbeaultPoissonModel& m);

/// Spectral pages E_1..E_r of kb_double_complex(m).
SpectralPages kb_spectral_pages(const DolbeaultPoissonModel& m, int r_max);

/// dbar-cohomology dims of the model at each (p, q).
HodgeDiamond hodge_diamond(const DolbeaultPoissonModel& m);

/// HH_k = sum_{p-q=k} h(p, q).
HHDims hkr_hochschild(const HodgeDiamond& h);

long long euler_char(const KBDims& d);

/// (-1)^n sum_{p,q} (-1)^{p+q} dim A^{p,q}; equals euler_char(kb_homology(m)).
long long chain_euler_char(const DolbeaultPoissonModel& m);

}  // namespace kbh
