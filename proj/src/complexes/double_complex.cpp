#include "kbh/complexes/double_complex.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "kbh/errors.hpp"

namespace kbh {

std::string to_string(const Bidegree& b) {
  return "(" + std::to_string(b.p) + "," + std::to_string(b.q) + ")";
}

namespace {

void check_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what,
                 Bidegree from) {
  if (m.rows() != rows || m.cols() != cols) {
    throw std::invalid_argument(std::string(what) + " block at " + to_string(from) +
                                " has shape " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected " +
                                std::to_string(rows) + "x" + std::to_string(cols));
  }
}

}  // namespace

void DoubleComplex::set_dim(Bidegree b, std::size_t dim) {
  if (dim == 0) {
    dims_.erase(b);
  } else {
    dims_[b] = dim;
  }
}

void DoubleComplex::set_d1(Bidegree from, Matrix m) {
  check_shape(m, dim({from.p + 1, from.q}), dim(from), "d1", from);
  if (m.is_zero()) {
    d1_.erase(from);
  } else {
    d1_[from] = std::move(m);
  }
}

void DoubleComplex::set_d2(Bidegree from, Matrix m) {
  check_shape(m, dim({from.p, from.q + 1}), dim(from), "d2", from);
  if (m.is_zero()) {
    d2_.erase(from);
  } else {
    d2_[from] = std::move(m);
  }
}

std::size_t DoubleComplex::dim(Bidegree b) const {
  auto it = dims_.find(b);
  return it == dims_.end() ? 0 : it->second;
}

Matrix DoubleComplex::d1(Bidegree from) const {
  auto it = d1_.find(from);
  return it == d1_.end() ? Matrix(dim({from.p + 1, from.q}), dim(from)) : it->second;
}

Matrix DoubleComplex::d2(Bidegree from) const {
  auto it = d2_.find(from);
  return it == d2_.end() ? Matrix(dim({from.p, from.q + 1}), dim(from)) : it->second;
}

int DoubleComplex::min_p() const {
  int m = 0;
  bool first = true;
  for (const auto& [b, d] : dims_) {
    if (first || b.p < m) m = b.p;
    first = false;
  }
  return m;
}

int DoubleComplex::max_p() const {
  int m = -1;
  bool first = true;
  for (const auto& [b, d] : dims_) {
    if (first || b.p > m) m = b.p;
    first = false;
  }
  return m;
}

void DoubleComplex::validate() const {
  for (const auto& [b, d] : dims_) {
    const Bidegree right{b.p + 1, b.q};
    const Bidegree up{b.p, b.q + 1};
    if (!(d1(right) * d1(b)).is_zero()) {
      throw ValidationError("d1 d1 != 0 at " + to_string(b));
    }
    if (!(d2(up) * d2(b)).is_zero()) {
      throw ValidationError("d2 d2 != 0 at " + to_string(b));
    }
    if (!(d1(up) * d2(b) + d2(right) * d1(b)).is_zero()) {
      throw ValidationError("d1 d2 + d2 d1 != 0 at " + to_string(b));
    }
  }
}

TotalLayout::TotalLayout(const DoubleComplex& dc) {
  for (const auto& [b, d] : dc.dims()) {
    const int k = b.p + b.q;
    auto& list = cells[k];
    list.push_back(Cell{b, 0, d});
  }
  for (auto& [k, list] : cells) {
    std::sort(list.begin(), list.end(),
              [](const Cell& x, const Cell& y) { return x.bidegree.p < y.bidegree.p; });
    std::size_t off = 0;
    for (auto& c : list) {
      c.offset = off;
      off += c.dim;
    }
    totals[k] = off;
  }
}

std::size_t TotalLayout::offset(Bidegree b) const {
  auto it = cells.find(b.p + b.q);
  if (it != cells.end()) {
    for (const auto& c : it->second) {
      if (c.bidegree == b) return c.offset;
    }
  }
  throw std::out_of_range("TotalLayout::offset: no cell at " + to_string(b));
}

std::size_t TotalLayout::total(int k) const {
  auto it = totals.find(k);
  return it == totals.end() ? 0 : it->second;
}

Complex total_complex(const DoubleComplex& dc) {
  dc.validate();
  const TotalLayout layout(dc);
  Complex c;
  for (const auto& [k, n] : layout.totals) c.set_dim(k, n);
  for (const auto& [k, list] : layout.cells) {
    Matrix d(layout.total(k + 1), layout.total(k));
    for (const auto& cell : list) {
      const Bidegree b = cell.bidegree;
      const Bidegree right{b.p + 1, b.q};
      const Bidegree up{b.p, b.q + 1};
      if (dc.dim(right) > 0) d.place(layout.offset(right), cell.offset, dc.d1(b));
      if (dc.dim(up) > 0) d.place(layout.offset(up), cell.offset, dc.d2(b));
    }
    c.set_differential(k, std::move(d));
  }
  return c;
}

DoubleComplex shift(const DoubleComplex& dc, int m, int n) {
  DoubleComplex out;
  const Bidegree delta{-m, -n};
  for (const auto& [b, d] : dc.dims()) out.set_dim(b + delta, d);
  for (const auto& [b, mat] : dc.d1_blocks()) out.set_d1(b + delta, mat);
  for (const auto& [b, mat] : dc.d2_blocks()) out.set_d2(b + delta, mat);
  return out;
}

DoubleComplex tensor_double(const DoubleComplex& a, const DoubleComplex& b) {
  a.validate();
  b.validate();
  DoubleComplex out;
  // offsets[(result bidegree)][(cell of a)] -> offset of A(a) (x) B(P - a)
  std::map<Bidegree, std::map<Bidegree, std::size_t>> offsets;
  for (const auto& [ca, da] : a.dims()) {
    for (const auto& [cb, db] : b.dims()) {
      const Bidegree P = ca + cb;
      offsets[P][ca] = 0;
    }
  }
  for (auto& [P, parts] : offsets) {
    std::size_t off = 0;
    for (auto& [ca, o] : parts) {
      o = off;
      off += a.dim(ca) * b.dim({P.p - ca.p, P.q - ca.q});
    }
    out.set_dim(P, off);
  }
  auto locate = [&](Bidegree P, Bidegree ca) -> std::optional<std::size_t> {
    auto it = offsets.find(P);
    if (it == offsets.end()) return std::nullopt;
    auto jt = it->second.find(ca);
    if (jt == it->second.end()) return std::nullopt;
    return jt->second;
  };

  for (const auto& [P, parts] : offsets) {
    const Bidegree right{P.p + 1, P.q};
    const Bidegree up{P.p, P.q + 1};
    Matrix m1(out.dim(right), out.dim(P));
    Matrix m2(out.dim(up), out.dim(P));
    for (const auto& [ca, off] : parts) {
      const Bidegree cb{P.p - ca.p, P.q - ca.q};
      const Rational sign = (ca.p + ca.q) % 2 == 0 ? 1 : -1;
      const Matrix ida = Matrix::identity(a.dim(ca));
      const Matrix idb = Matrix::identity(b.dim(cb));
      const Bidegree dirs[2] = {{1, 0}, {0, 1}};
      for (int which = 0; which < 2; ++which) {
        Matrix& target = which == 0 ? m1 : m2;
        const Bidegree step = dirs[which];
        const Bidegree ta = ca + step;
        if (a.dim(ta) > 0) {
          if (auto o = locate(P + step, ta)) {
            const Matrix da = which == 0 ? a.d1(ca) : a.d2(ca);
            target.place(*o, off, Matrix::kron(da, idb));
          }
        }
        const Bidegree tb = cb + step;
        if (b.dim(tb) > 0) {
          if (auto o = locate(P + step, ca)) {
            const Matrix db = which == 0 ? b.d1(cb) : b.d2(cb);
            target.place(*o, off, Matrix::kron(ida, db), sign);
          }
        }
      }
    }
    if (out.dim(right) > 0) out.set_d1(P, std::move(m1));
    if (out.dim(up) > 0) out.set_d2(P, std::move(m2));
  }
  out.validate();
  return out;
}

bool operator==(const DoubleComplex& a, const DoubleComplex& b) {
  return a.dims() == b.dims() && a.d1_blocks() == b.d1_blocks() &&
         a.d2_blocks() == b.d2_blocks();
}

}  // namespace kbh
