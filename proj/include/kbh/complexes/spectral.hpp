#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "kbh/complexes/double_complex.hpp"

namespace kbh {

using PageDims = std::map<Bidegree, std::size_t>;

struct SpectralPage {
  int r = 1;
  PageDims dims;
};

/// Pages of the spectral sequence of the column filtration
/// F^p = sum_{p' >= p} K^{p',*}. E_1^{p,q} is the d2-cohomology of column p.
struct SpectralPages {
  std::vector<SpectralPage> pages;  // r = 1..r_max
  PageDims limit;                   // E_infinity
  int degeneration_page = 1;        // least r with E_r = E_infinity

  const PageDims& page(int r) const;
};

/// Computes E_r as Z_r^p / (Z_{r-1}^{p+1} + D Z_{r-1}^{p-r+1}) inside the
/// total complex, with Z_r^p = {x in F^p : Dx in F^{p+r}}.
SpectralPages spectral_pages(const DoubleComplex& dc, int r_max);

/// Sum over p + q = k of a page's dims.
std::map<int, std::size_t> diagonal_sums(const PageDims& dims);

}  // namespace kbh
