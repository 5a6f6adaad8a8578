#include "kbh/complexes/complex.hpp"

#include <stdexcept>

#include "kbh/errors.hpp"

namespace kbh {

void Complex::set_dim(int degree, std::size_t dim) {
  if (dim == 0) {
    dims_.erase(degree);
  } else {
    dims_[degree] = dim;
  }
}

void Complex::set_differential(int degree, Matrix d) {
  if (d.rows() != dim(degree + 1) || d.cols() != dim(degree)) {
    throw std::invalid_argument("Complex::set_differential: d^" + std::to_string(degree) +
                                " has shape " + std::to_string(d.rows()) + "x" +
                                std::to_string(d.cols()) + ", expected " +
                                std::to_string(dim(degree + 1)) + "x" +
                                std::to_string(dim(degree)));
  }
  if (d.is_zero()) {
    diffs_.erase(degree);
  } else {
    diffs_[degree] = std::move(d);
  }
}

std::size_t Complex::dim(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

Matrix Complex::differential(int degree) const {
  auto it = diffs_.find(degree);
  return it == diffs_.end() ? Matrix(dim(degree + 1), dim(degree)) : it->second;
}

int Complex::min_degree() const { return dims_.empty() ? 0 : dims_.begin()->first; }
int Complex::max_degree() const { return dims_.empty() ? -1 : dims_.rbegin()->first; }

void Complex::validate() const {
  for (const auto& [k, d] : diffs_) {
    auto next = diffs_.find(k + 1);
    if (next == diffs_.end()) continue;
    if (!(next->second * d).is_zero()) {
      throw ValidationError("d^" + std::to_string(k + 1) + " d^" + std::to_string(k) + " != 0");
    }
  }
}

std::map<int, std::size_t> homology_dims(const Complex& c) {
  std::map<int, std::size_t> h;
  if (c.empty()) return h;
  std::map<int, std::size_t> ranks;
  for (int k = c.min_degree() - 1; k <= c.max_degree(); ++k) ranks[k] = rank(c.differential(k));
  for (int k = c.min_degree(); k <= c.max_degree(); ++k) {
    h[k] = c.dim(k) - ranks[k] - ranks[k - 1];
  }
  return h;
}

long long alternating_sum(const std::map<int, std::size_t>& dims) {
  long long s = 0;
  for (const auto& [k, n] : dims) s += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(n);
  return s;
}

Matrix HomologyBasis::coordinates(const Matrix& cycles) const {
  const auto x = solve(Matrix::hstack(boundaries, representatives), cycles);
  if (!x) throw std::invalid_argument("HomologyBasis::coordinates: not a cycle");
  return x->block(boundaries.cols(), 0, representatives.cols(), cycles.cols());
}

HomologyBasis homology_basis(const Complex& c, int degree) {
  const Subspace cycles = kernel_basis(c.differential(degree));
  const Subspace bounds = Subspace::span(c.differential(degree - 1));
  // Greedy extension: boundary columns come first, so the independent
  // columns past them are exactly a complement of B inside Z.
  const Matrix joined = Matrix::hstack(bounds.basis(), cycles.basis());
  std::vector<std::size_t> reps;
  for (std::size_t j : independent_columns(joined)) {
    if (j >= bounds.dim()) reps.push_back(j);
  }
  return HomologyBasis{bounds.basis(), joined.select_columns(reps)};
}

Matrix ChainMap::at(int degree) const {
  auto it = components.find(degree);
  return it == components.end() ? Matrix(target.dim(degree), source.dim(degree)) : it->second;
}

void ChainMap::validate() const {
  for (const auto& [k, f] : components) {
    if (f.rows() != target.dim(k) || f.cols() != source.dim(k)) {
      throw ValidationError("chain map component in degree " + std::to_string(k) +
                            " has the wrong shape");
    }
  }
  int lo = std::min(source.min_degree(), target.min_degree());
  int hi = std::max(source.max_degree(), target.max_degree());
  for (int k = lo - 1; k <= hi; ++k) {
    if (target.differential(k) * at(k) != at(k + 1) * source.differential(k)) {
      throw ValidationError("chain map does not commute with d in degree " + std::to_string(k));
    }
  }
}

}  // namespace kbh
