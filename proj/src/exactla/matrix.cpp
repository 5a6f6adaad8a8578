#include "kbh/exactla/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace kbh {

namespace {

const Rational kZero{0};

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  Matrix m(rows.size(), cols);
  std::size_t i = 0;
  for (const auto& r : rows) {
    require(r.size() == cols, "Matrix::from_rows: ragged rows");
    std::size_t j = 0;
    for (const auto& v : r) m.set(i, j++, v);
    ++i;
  }
  return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, "Matrix::from_dense: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace(i, 1);
  return m;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (const auto& [j, av] : a.rows_[i]) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (const auto& [l, bv] : b.rows_[k]) {
          m.rows_[i * b.rows() + k].emplace(j * b.cols() + l, av * bv);
        }
      }
    }
  }
  return m;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
  require(left.rows() == right.rows(), "Matrix::hstack: row mismatch");
  Matrix m(left.rows(), left.cols() + right.cols());
  m.place(0, 0, left);
  m.place(0, left.cols(), right);
  return m;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  require(top.cols() == bottom.cols(), "Matrix::vstack: column mismatch");
  Matrix m(top.rows() + bottom.rows(), top.cols());
  m.place(0, 0, top);
  m.place(top.rows(), 0, bottom);
  return m;
}

const Rational& Matrix::at(std::size_t i, std::size_t j) const {
  require(i < rows() && j < cols_, "Matrix::at: index out of range");
  const auto& r = rows_[i];
  auto it = r.find(j);
  return it == r.end() ? kZero : it->second;
}

void Matrix::set(std::size_t i, std::size_t j, const Rational& value) {
  require(i < rows() && j < cols_, "Matrix::set: index out of range");
  if (value == 0) {
    rows_[i].erase(j);
  } else {
    rows_[i][j] = value;
  }
}

void Matrix::add_to(std::size_t i, std::size_t j, const Rational& value) {
  require(i < rows() && j < cols_, "Matrix::add_to: index out of range");
  if (value == 0) return;
  auto& r = rows_[i];
  auto [it, inserted] = r.try_emplace(j, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) r.erase(it);
  }
}

bool Matrix::is_zero() const {
  for (const auto& r : rows_) {
    if (!r.empty()) return false;
  }
  return true;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (const auto& [j, v] : rows_[i]) t.rows_[j].emplace(i, v);
  }
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows() && c0 + nc <= cols_, "Matrix::block: out of range");
  Matrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    const auto& r = rows_[r0 + i];
    for (auto it = r.lower_bound(c0); it != r.end() && it->first < c0 + nc; ++it) {
      m.rows_[i].emplace(it->first - c0, it->second);
    }
  }
  return m;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix m(rows(), cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    require(cols[k] < cols_, "Matrix::select_columns: out of range");
    for (std::size_t i = 0; i < rows(); ++i) {
      const auto& r = rows_[i];
      auto it = r.find(cols[k]);
      if (it != r.end()) m.rows_[i].emplace(k, it->second);
    }
  }
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix m(rows.size(), cols_);
  for (std::size_t k = 0; k < rows.size(); ++k) m.rows_[k] = rows_.at(rows[k]);
  return m;
}

void Matrix::place(std::size_t r0, std::size_t c0, const Matrix& m, const Rational& scale) {
  require(r0 + m.rows() <= rows() && c0 + m.cols() <= cols_, "Matrix::place: out of range");
  if (scale == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& [j, v] : m.rows_[i]) add_to(r0 + i, c0 + j, v * scale);
  }
}

Matrix Matrix::column(std::size_t j) const { return select_columns({j}); }

Matrix Matrix::operator*(const Matrix& rhs) const {
  require(cols_ == rhs.rows(), "Matrix::operator*: shape mismatch");
  Matrix m(rows(), rhs.cols());
  for (std::size_t i = 0; i < rows(); ++i) {
    auto& out = m.rows_[i];
    for (const auto& [k, a] : rows_[i]) {
      for (const auto& [j, b] : rhs.rows_[k]) {
        auto [it, inserted] = out.try_emplace(j, a * b);
        if (!inserted) it->second += a * b;
      }
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
  }
  return m;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require(rows() == rhs.rows() && cols_ == rhs.cols_, "Matrix::operator+: shape mismatch");
  Matrix m = *this;
  m.place(0, 0, rhs);
  return m;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require(rows() == rhs.rows() && cols_ == rhs.cols_, "Matrix::operator-: shape mismatch");
  Matrix m = *this;
  m.place(0, 0, rhs, -1);
  return m;
}

Matrix Matrix::operator-() const { return scaled(-1); }

Matrix Matrix::scaled(const Rational& s) const {
  if (s == 0) return Matrix(rows(), cols_);
  Matrix m = *this;
  for (auto& r : m.rows_) {
    for (auto& [j, v] : r) v *= s;
  }
  return m;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return cols_ == rhs.cols_ && rows_ == rhs.rows_;
}

std::vector<std::vector<Rational>> Matrix::to_dense() const {
  std::vector<std::vector<Rational>> d(rows(), std::vector<Rational>(cols_));
  for (std::size_t i = 0; i < rows(); ++i) {
    for (const auto& [j, v] : rows_[i]) d[i][j] = v;
  }
  return d;
}

std::string Matrix::debug_string() const {
  std::ostringstream os;
  os << rows() << "x" << cols_ << " [";
  for (std::size_t i = 0; i < rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << to_string(at(i, j));
  }
  os << "]";
  return os.str();
}

}  // namespace kbh
