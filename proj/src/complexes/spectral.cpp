#include "kbh/complexes/spectral.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

namespace kbh {

namespace {

constexpr int kInfinity = std::numeric_limits<int>::max() / 4;

class FilteredTotal {
 public:
  explicit FilteredTotal(const DoubleComplex& dc) : total_(total_complex(dc)), layout_(dc) {}

  /// Coordinates of F^p inside total degree k.
  std::vector<std::size_t> filtration(int k, int p) const {
    std::vector<std::size_t> idx;
    auto it = layout_.cells.find(k);
    if (it == layout_.cells.end()) return idx;
    for (const auto& c : it->second) {
      if (c.bidegree.p < p) continue;
      for (std::size_t i = 0; i < c.dim; ++i) idx.push_back(c.offset + i);
    }
    return idx;
  }

  /// Coordinates in degree k lying in columns p' < bound.
  std::vector<std::size_t> below(int k, int bound) const {
    std::vector<std::size_t> idx;
    auto it = layout_.cells.find(k);
    if (it == layout_.cells.end()) return idx;
    for (const auto& c : it->second) {
      if (c.bidegree.p >= bound) continue;
      for (std::size_t i = 0; i < c.dim; ++i) idx.push_back(c.offset + i);
    }
    return idx;
  }

  /// Z_r^p in degree k: x in F^p with Dx in F^{p+r} (r = kInfinity: Dx = 0).
  Subspace cycles(int k, int p, int r) const {
    const std::size_t n = layout_.total(k);
    const auto cols = filtration(k, p);
    const Matrix d = total_.differential(k);
    std::vector<std::size_t> rows;
    if (r >= kInfinity) {
      for (std::size_t i = 0; i < d.rows(); ++i) rows.push_back(i);
    } else {
      rows = below(k + 1, p + r);
    }
    const Subspace kern = kernel_basis(d.select_rows(rows).select_columns(cols));
    Matrix embedded(n, kern.dim());
    for (std::size_t i = 0; i < cols.size(); ++i) {
      for (std::size_t j = 0; j < kern.dim(); ++j) embedded.set(cols[i], j, kern.basis().at(i, j));
    }
    return Subspace::span(embedded);
  }

  std::size_t page_dim(int k, int p, int r) const {
    const Subspace z = cycles(k, p, r);
    if (z.dim() == 0) return 0;
    Subspace denominator(layout_.total(k));
    if (r >= kInfinity) {
      const Subspace boundaries = Subspace::span(total_.differential(k - 1));
      const Subspace fp = Subspace::coordinate(layout_.total(k), filtration(k, p));
      denominator = sum(cycles(k, p + 1, kInfinity), intersection(fp, boundaries));
    } else {
      const Subspace lower = cycles(k - 1, p - r + 1, r - 1);
      denominator = sum(cycles(k, p + 1, r - 1), image(total_.differential(k - 1), lower));
    }
    return z.dim() - denominator.dim();
  }

 private:
  Complex total_;
  TotalLayout layout_;
};

}  // namespace

const PageDims& SpectralPages::page(int r) const {
  for (const auto& pg : pages) {
    if (pg.r == r) return pg.dims;
  }
  throw std::out_of_range("SpectralPages::page: page " + std::to_string(r) + " not computed");
}

SpectralPages spectral_pages(const DoubleComplex& dc, int r_max) {
  r_max = std::max(r_max, 1);
  SpectralPages out;
  if (dc.empty()) {
    for (int r = 1; r <= r_max; ++r) out.pages.push_back({r, {}});
    return out;
  }
  const FilteredTotal ft(dc);
  auto compute = [&](int r) {
    PageDims dims;
    for (const auto& [b, d] : dc.dims()) dims[b] = ft.page_dim(b.p + b.q, b.p, r);
    return dims;
  };
  out.limit = compute(kInfinity);
  // d_r vanishes once r exceeds the column spread, so E_width = E_infinity.
  const int width = dc.max_p() - dc.min_p() + 1;
  const int last = std::max(r_max, width);
  std::optional<int> degenerate;
  for (int r = 1; r <= last; ++r) {
    PageDims dims = compute(r);
    if (!degenerate && dims == out.limit) degenerate = r;
    if (r <= r_max) out.pages.push_back({r, std::move(dims)});
  }
  if (!degenerate) throw std::logic_error("spectral_pages: no page reached the limit");
  out.degeneration_page = *degenerate;
  return out;
}

std::map<int, std::size_t> diagonal_sums(const PageDims& dims) {
  std::map<int, std::size_t> sums;
  for (const auto& [b, d] : dims) sums[b.p + b.q] += d;
  return sums;
}

}  // namespace kbh
