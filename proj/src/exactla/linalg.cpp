#include "kbh/exactla/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace kbh {

namespace {

Echelon::IntRow integer_row(const Matrix::Row& row) {
  Integer scale = 1;
  for (const auto& [j, v] : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
  Echelon::IntRow out;
  for (const auto& [j, v] : row) {
    Integer num = v.get_num() * (scale / v.get_den());
    out.emplace(j, std::move(num));
  }
  return out;
}

// (p * s - a * r) / prev, exact by the Bareiss minor identity.
void bareiss_update(Echelon::IntRow& s, const Echelon::IntRow& r, const Integer& p,
                    const Integer& a, const Integer& prev) {
  Echelon::IntRow out;
  auto si = s.begin();
  auto ri = r.begin();
  Integer tmp;
  while (si != s.end() || ri != r.end()) {
    std::size_t j;
    tmp = 0;
    if (ri == r.end() || (si != s.end() && si->first < ri->first)) {
      j = si->first;
      tmp = p * si->second;
      ++si;
    } else if (si == s.end() || ri->first < si->first) {
      j = ri->first;
      if (a != 0) tmp = -a * ri->second;
      ++ri;
    } else {
      j = si->first;
      tmp = p * si->second - a * ri->second;
      ++si;
      ++ri;
    }
    if (tmp != 0) {
      mpz_divexact(tmp.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      out.emplace(j, tmp);
    }
  }
  s = std::move(out);
}

Matrix primitive_column(const std::vector<Rational>& v) {
  Integer den = 1;
  Integer g = 0;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  for (const auto& x : v) {
    Integer num = x.get_num() * (den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  Matrix col(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational scaled = v[i] * den;
    if (g != 0) scaled /= g;
    col.set(i, 0, scaled);
  }
  return col;
}

}  // namespace

Echelon::Echelon(const Matrix& m) : Echelon(m, m.cols()) {}

Echelon::Echelon(const Matrix& m, std::size_t pivot_limit)
    : cols_(m.cols()), limit_(std::min(pivot_limit, m.cols())) {
  std::vector<IntRow> work;
  std::vector<std::size_t> source;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.row(i).empty()) continue;
    work.push_back(integer_row(m.row(i)));
    source.push_back(i);
  }
  std::vector<std::size_t> active(work.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;

  Integer prev = 1;
  for (;;) {
    auto it = std::find_if(active.begin(), active.end(), [&](std::size_t idx) {
      return !work[idx].empty() && work[idx].begin()->first < limit_;
    });
    if (it == active.end()) break;
    const std::size_t pidx = *it;
    active.erase(it);
    const IntRow& r = work[pidx];
    const std::size_t col = r.begin()->first;
    const Integer p = r.begin()->second;
    for (std::size_t s : active) {
      auto found = work[s].find(col);
      const Integer a = found == work[s].end() ? Integer(0) : found->second;
      bareiss_update(work[s], r, p, a, prev);
    }
    pivots_.push_back(Pivot{source[pidx], col, r});
    prev = p;
  }
  for (std::size_t s : active) {
    if (!work[s].empty()) residual_.push_back(std::move(work[s]));
  }
}

std::vector<Rational> Echelon::back_substitute(const std::vector<Rational>& fixed_tail,
                                               const std::vector<Rational>& free_values) const {
  std::vector<Rational> x(limit_);
  std::vector<bool> is_pivot(limit_, false);
  for (const auto& pv : pivots_) is_pivot[pv.column] = true;
  for (std::size_t j = 0; j < limit_; ++j) {
    if (!is_pivot[j] && j < free_values.size()) x[j] = free_values[j];
  }
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    Rational acc = 0;
    Rational lead = 0;
    for (const auto& [j, v] : it->row) {
      if (j == it->column) {
        lead = Rational(v);
      } else if (j < limit_) {
        if (x[j] != 0) acc += Rational(v) * x[j];
      } else if (j - limit_ < fixed_tail.size()) {
        acc += Rational(v) * fixed_tail[j - limit_];
      }
    }
    x[it->column] = -acc / lead;
  }
  return x;
}

std::size_t rank(const Matrix& m) { return Echelon(m).rank(); }

Subspace kernel_basis(const Matrix& m) {
  const Echelon e(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& pv : e.pivots()) is_pivot[pv.column] = true;
  Matrix basis(m.cols(), m.cols() - e.rank());
  std::size_t k = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> free(m.cols());
    free[f] = 1;
    basis.place(0, k++, primitive_column(e.back_substitute({}, free)));
  }
  return Subspace::span(basis);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const Echelon e(Matrix::hstack(a, b), a.cols());
  Matrix x(a.cols(), b.cols());
  for (std::size_t t = 0; t < b.cols(); ++t) {
    for (const auto& row : e.residual()) {
      if (row.count(a.cols() + t)) return std::nullopt;
    }
    std::vector<Rational> tail(b.cols());
    tail[t] = -1;
    const auto sol = e.back_substitute(tail, {});
    for (std::size_t i = 0; i < sol.size(); ++i) x.set(i, t, sol[i]);
  }
  return x;
}

std::vector<std::size_t> independent_columns(const Matrix& m) {
  const Echelon e(m.transpose());
  std::vector<std::size_t> cols;
  for (const auto& pv : e.pivots()) cols.push_back(pv.source_row);
  std::sort(cols.begin(), cols.end());
  return cols;
}

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}

Subspace::Subspace(std::size_t ambient, Matrix basis)
    : ambient_(ambient), basis_(std::move(basis)) {}

Subspace Subspace::span(const Matrix& vectors) {
  return Subspace(vectors.rows(), vectors.select_columns(independent_columns(vectors)));
}

Subspace Subspace::full(std::size_t ambient) {
  return Subspace(ambient, Matrix::identity(ambient));
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& indices) {
  std::vector<std::size_t> idx = indices;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  Matrix b(ambient, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) b.set(idx[k], k, 1);
  return Subspace(ambient, std::move(b));
}

bool Subspace::contains(const Matrix& vectors) const {
  if (vectors.rows() != ambient_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
  return rank(Matrix::hstack(basis_, vectors)) == dim();
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && dim() == other.dim() && contains(other.basis_);
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  return Subspace::span(Matrix::hstack(u.basis(), v.basis()));
}

Subspace intersection(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw std::invalid_argument("intersection: ambient mismatch");
  }
  const Subspace k = kernel_basis(Matrix::hstack(u.basis(), -v.basis()));
  const Matrix coeffs = k.basis().block(0, 0, u.dim(), k.dim());
  return Subspace::span(u.basis() * coeffs);
}

Subspace image(const Matrix& m, const Subspace& u) {
  if (m.cols() != u.ambient_dim()) throw std::invalid_argument("image: shape mismatch");
  return Subspace::span(m * u.basis());
}

Subspace preimage(const Matrix& m, const Subspace& w) {
  if (m.rows() != w.ambient_dim()) throw std::invalid_argument("preimage: shape mismatch");
  const Subspace k = kernel_basis(Matrix::hstack(m, -w.basis()));
  return Subspace::span(k.basis().block(0, 0, m.cols(), k.dim()));
}

SubspaceDims subspace_arithmetic(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw std::invalid_argument("subspace_arithmetic: ambient dimension mismatch (" +
                                std::to_string(u.ambient_dim()) + " vs " +
                                std::to_string(v.ambient_dim()) + ")");
  }
  SubspaceDims d;
  d.sum_dim = rank(Matrix::hstack(u.basis(), v.basis()));
  d.intersection_dim = u.dim() + v.dim() - d.sum_dim;
  d.quotient_dim = d.sum_dim - v.dim();
  return d;
}

}  // namespace kbh
