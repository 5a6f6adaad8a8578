#include "kbh/poisson/model.hpp"

#include <sstream>
#include <stdexcept>

namespace kbh {

namespace {

void normalize_blocks(BlockMap& blocks, const DolbeaultPoissonModel& m, Bidegree step,
                      const char* what) {
  for (auto it = blocks.begin(); it != blocks.end();) {
    const Bidegree from = it->first;
    const Bidegree to = from + step;
    const Matrix& mat = it->second;
    if (mat.rows() != m.dim(to) || mat.cols() != m.dim(from)) {
      throw std::invalid_argument(std::string(what) + " block from " + to_string(from) +
                                  " has shape " + std::to_string(mat.rows()) + "x" +
                                  std::to_string(mat.cols()) + ", expected " +
                                  std::to_string(m.dim(to)) + "x" +
                                  std::to_string(m.dim(from)));
    }
    it = mat.is_zero() ? blocks.erase(it) : std::next(it);
  }
}

Matrix lookup(const BlockMap& blocks, const DolbeaultPoissonModel& m, Bidegree from,
              Bidegree step) {
  auto it = blocks.find(from);
  return it == blocks.end() ? Matrix(m.dim(from + step), m.dim(from)) : it->second;
}

constexpr Bidegree kDelStep{1, 0};
constexpr Bidegree kDelbarStep{0, 1};
constexpr Bidegree kContractionStep{-2, 0};

}  // namespace

DolbeaultPoissonModel::DolbeaultPoissonModel(int n, Labels labels, BlockMap del,
                                             BlockMap delbar, BlockMap contraction,
                                             ModelInfo info, std::optional<WedgeData> wedge)
    : n_(n),
      labels_(std::move(labels)),
      del_(std::move(del)),
      delbar_(std::move(delbar)),
      contraction_(std::move(contraction)),
      info_(std::move(info)),
      wedge_(std::move(wedge)) {
  if (n_ < 0) throw std::invalid_argument("model dimension n must be >= 0");
  for (auto it = labels_.begin(); it != labels_.end();) {
    const Bidegree b = it->first;
    if (b.p < 0 || b.q < 0 || b.p > n_ || b.q > n_) {
      if (!it->second.empty()) {
        throw std::invalid_argument("basis at " + to_string(b) + " lies outside 0 <= p,q <= " +
                                    std::to_string(n_));
      }
    }
    it = it->second.empty() ? labels_.erase(it) : std::next(it);
  }
  normalize_blocks(del_, *this, kDelStep, "del");
  normalize_blocks(delbar_, *this, kDelbarStep, "delbar");
  normalize_blocks(contraction_, *this, kContractionStep, "contraction");
  if (wedge_) {
    for (const auto& [b, names] : labels_) {
      auto it = wedge_->monomials.find(b);
      if (it == wedge_->monomials.end() || it->second.size() != names.size()) {
        throw std::invalid_argument("wedge data does not match the basis at " + to_string(b));
      }
    }
  }
}

std::size_t DolbeaultPoissonModel::dim(Bidegree b) const {
  auto it = labels_.find(b);
  return it == labels_.end() ? 0 : it->second.size();
}

std::size_t DolbeaultPoissonModel::total_dim() const {
  std::size_t s = 0;
  for (const auto& [b, names] : labels_) s += names.size();
  return s;
}

Matrix DolbeaultPoissonModel::del(Bidegree from) const {
  return lookup(del_, *this, from, kDelStep);
}
Matrix DolbeaultPoissonModel::delbar(Bidegree from) const {
  return lookup(delbar_, *this, from, kDelbarStep);
}
Matrix DolbeaultPoissonModel::contraction(Bidegree from) const {
  return lookup(contraction_, *this, from, kContractionStep);
}

DolbeaultPoissonModel DolbeaultPoissonModel::with_contraction(BlockMap contraction) const {
  return DolbeaultPoissonModel(n_, labels_, del_, delbar_, std::move(contraction), info_, wedge_);
}

DolbeaultPoissonModel DolbeaultPoissonModel::with_info(ModelInfo info) const {
  return DolbeaultPoissonModel(n_, labels_, del_, delbar_, contraction_, std::move(info), wedge_);
}

bool operator==(const DolbeaultPoissonModel& a, const DolbeaultPoissonModel& b) {
  return a.n() == b.n() && a.labels() == b.labels() && a.del_blocks() == b.del_blocks() &&
         a.delbar_blocks() == b.delbar_blocks() &&
         a.contraction_blocks() == b.contraction_blocks();
}

Matrix KoszulDifferential::block(const DolbeaultPoissonModel& m, Bidegree from) const {
  auto it = blocks.find(from);
  return it == blocks.end() ? Matrix(m.dim({from.p - 1, from.q}), m.dim(from)) : it->second;
}

bool ValidationReport::passed() const { return first_failure() == nullptr; }

const IdentityCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed && c.at) os << " at " << to_string(*c.at);
    os << "\n";
  }
  return os.str();
}

}  // namespace kbh
